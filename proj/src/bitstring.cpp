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
#include "qmine/bitstring.hpp"

#include "qmine/errors.hpp"

#include <charconv>

namespace qmine {

namespace {

std::uint64_t width_mask(unsigned width) {
    return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

void check_width(unsigned width) {
    if (width == 0 || width > BitString::max_width) {
        throw ArgumentError("bit string width must be in [1, 32], got " +
                            std::to_string(width));
    }
}

} // namespace

BitString::BitString(std::uint32_t value, unsigned width) : value_(value), width_(width) {
    check_width(width);
    if ((value & ~width_mask(width)) != 0) {
        throw ArgumentError("value " + std::to_string(value) + " does not fit in " +
                            std::to_string(width) + " bits");
    }
}

BitString BitString::truncate(std::uint64_t value, unsigned width) {
    check_width(width);
    return {static_cast<std::uint32_t>(value & width_mask(width)), width};
}

BitString BitString::from_hex(std::string_view hex, unsigned width) {
    if (hex.starts_with("0x") || hex.starts_with("0X")) {
        hex.remove_prefix(2);
    }
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(hex.data(), hex.data() + hex.size(), value, 16);
    if (hex.empty() || ec != std::errc{} || ptr != hex.data() + hex.size()) {
        throw ArgumentError("invalid hex string '" + std::string(hex) + "'");
    }
    check_width(width);
    if ((value & ~width_mask(width)) != 0) {
        throw ArgumentError("hex value '" + std::string(hex) + "' does not fit in " +
                            std::to_string(width) + " bits");
    }
    return {static_cast<std::uint32_t>(value), width};
}

bool BitString::leading_zeros_at_least(unsigned count) const {
    if (count > width_) {
        throw ArgumentError("leading-zero count exceeds bit width");
    }
    return leading_zeros() >= count;
}

unsigned BitString::leading_zeros() const noexcept {
    unsigned zeros = 0;
    for (unsigned i = width_; i-- > 0;) {
        if (bit(i)) {
            break;
        }
        ++zeros;
    }
    return zeros;
}

std::string BitString::to_hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    const unsigned count = (width_ + 3) / 4;
    std::string out(count, '0');
    for (unsigned d = 0; d < count; ++d) {
        out[count - 1 - d] = digits[(value_ >> (4 * d)) & 0xF];
    }
    return out;
}

std::string BitString::to_binary() const {
    std::string out;
    out.reserve(width_);
    for (unsigned i = width_; i-- > 0;) {
        out.push_back(bit(i) ? '1' : '0');
    }
    return out;
}

BitString &BitString::operator^=(const BitString &other) {
    if (other.width_ != width_) {
        throw ArgumentError("xor of bit strings with different widths");
    }
    value_ ^= other.value_;
    return *this;
}

} // namespace qmine
