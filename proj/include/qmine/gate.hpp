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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace qmine {

using Qubit = unsigned;

enum class GateKind : std::uint8_t { h, x, swap, mcx };

inline constexpr std::size_t gate_kind_count = 4;

enum class Polarity : std::uint8_t { positive, negative };

struct Control {
    Qubit qubit;
    Polarity polarity = Polarity::positive;

    friend bool operator==(const Control &, const Control &) = default;
};

/// One reversible gate. H, X, and SWAP carry no controls; MCX has a single
/// target and at least one control. All supported gates are self-inverse.
///
/// Factories do not check qubit distinctness; that happens when the gate is
/// appended to a circuit or applied to a state.
class Gate {
  public:
    static Gate h(Qubit q);
    static Gate x(Qubit q);
    static Gate swap(Qubit a, Qubit b);
    static Gate mcx(std::vector<Control> controls, Qubit target);
    static Gate cnot(Qubit control, Qubit target);
    static Gate ccnot(Qubit c0, Qubit c1, Qubit target);

    [[nodiscard]] GateKind kind() const noexcept { return kind_; }
    [[nodiscard]] const std::vector<Qubit> &targets() const noexcept { return targets_; }
    [[nodiscard]] const std::vector<Control> &controls() const noexcept { return controls_; }

    /// Largest qubit index referenced.
    [[nodiscard]] Qubit max_qubit() const noexcept;
    /// True when no qubit appears twice among targets and controls.
    [[nodiscard]] bool qubits_distinct() const;
    /// Every qubit referenced, targets first.
    [[nodiscard]] std::vector<Qubit> qubits() const;

    /// `KIND targets... [±control ...]`, e.g. `MCX 0 [+1 -2]`.
    [[nodiscard]] std::string to_string() const;
    /// Inverse of to_string; throws ArgumentError on malformed lines.
    static Gate parse(const std::string &line);

    friend bool operator==(const Gate &, const Gate &) = default;

  private:
    Gate(GateKind kind, std::vector<Qubit> targets, std::vector<Control> controls)
        : kind_(kind), targets_(std::move(targets)), controls_(std::move(controls)) {}

    GateKind kind_;
    std::vector<Qubit> targets_;
    std::vector<Control> controls_;
};

std::string to_string(GateKind kind);

/// Gate totals by kind, accumulated when gates are applied.
struct GateStats {
    std::uint64_t total = 0;
    std::array<std::uint64_t, gate_kind_count> by_kind{};

    void record(GateKind kind) noexcept {
        ++total;
        ++by_kind[static_cast<std::size_t>(kind)];
    }
    [[nodiscard]] std::uint64_t count(GateKind kind) const noexcept {
        return by_kind[static_cast<std::size_t>(kind)];
    }
    GateStats &operator+=(const GateStats &other) noexcept;
    friend bool operator==(const GateStats &, const GateStats &) = default;
};

} // namespace qmine
