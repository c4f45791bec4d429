// Copyright 2026 The qmine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace qmine {

/// Fixed-width bit string of at most 32 bits. Bit i maps to register qubit i;
/// bit width-1 is the leading (most significant) bit.
class BitString {
  public:
    static constexpr unsigned max_width = 32;

    BitString() = default;
    /// Throws ArgumentError if width is out of range or value does not fit.
    BitString(std::uint32_t value, unsigned width);

    /// Keeps the low `width` bits of value.
    static BitString truncate(std::uint64_t value, unsigned width);
    static BitString zeros(unsigned width) { return {0, width}; }
    /// Parses hex digits (no prefix); throws ArgumentError on bad input.
    static BitString from_hex(std::string_view hex, unsigned width);

    [[nodiscard]] std::uint32_t value() const noexcept { return value_; }
    [[nodiscard]] unsigned width() const noexcept { return width_; }
    [[nodiscard]] bool bit(unsigned i) const noexcept { return ((value_ >> i) & 1U) != 0; }

    /// True when the top `count` bits are all zero.
    [[nodiscard]] bool leading_zeros_at_least(unsigned count) const;
    [[nodiscard]] unsigned leading_zeros() const noexcept;

    /// Lower-case hex, ceil(width/4) digits.
    [[nodiscard]] std::string to_hex() const;
    /// Leading bit first.
    [[nodiscard]] std::string to_binary() const;

    BitString &operator^=(const BitString &other);
    friend BitString operator^(BitString a, const BitString &b) { return a ^= b; }
    friend bool operator==(const BitString &, const BitString &) = default;

  private:
    std::uint32_t value_ = 0;
    unsigned width_ = 0;
};

using Digest = BitString;

} // namespace qmine
