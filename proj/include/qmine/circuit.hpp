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
/**
 * @file
 * Ordered reversible-gate circuits, the classical-primitive constructions
 * (XOR, AND, NOT, rotation), and exact inversion.
 */
#pragma once

#include "qmine/gate.hpp"
#include "qmine/statevector.hpp"

#include <span>
#include <string>
#include <vector>

namespace qmine {

class Circuit {
  public:
    explicit Circuit(unsigned num_qubits, std::string label = {});

    /// Throws IndexError if the gate repeats a qubit or references one
    /// outside [0, num_qubits).
    void append(Gate gate);
    /// Appends every gate of `other`, which must not be wider than this circuit.
    void append(const Circuit &other);

    [[nodiscard]] unsigned num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] const std::vector<Gate> &gates() const noexcept { return gates_; }
    [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }
    [[nodiscard]] bool empty() const noexcept { return gates_.empty(); }
    [[nodiscard]] const std::string &label() const noexcept { return label_; }

    /// Static gate totals by kind (what one application would record).
    [[nodiscard]] GateStats gate_counts() const;

    /// One gate per line in Gate::to_string format, preceded by a
    /// `# <label> qubits=<n> gates=<count>` header line.
    [[nodiscard]] std::string dump() const;
    static Circuit parse(const std::string &text);

    friend bool operator==(const Circuit &a, const Circuit &b) {
        return a.num_qubits_ == b.num_qubits_ && a.gates_ == b.gates_;
    }

  private:
    unsigned num_qubits_;
    std::vector<Gate> gates_;
    std::string label_;
};

/// Reverses gate order. Every supported gate is its own inverse.
[[nodiscard]] Circuit invert(const Circuit &circuit);

/// target ^= a, target ^= b. With target prepared in |0>, it ends as a XOR b.
void emit_xor_into(Circuit &circuit, Qubit a, Qubit b, Qubit target);
/// target ^= a AND b (one Toffoli).
void emit_and_into(Circuit &circuit, Qubit a, Qubit b, Qubit target);
void emit_not(Circuit &circuit, Qubit a);
/// Cyclic left rotation: new bit i = old bit (i - k) mod len, realised as a
/// SWAP network from the cycle decomposition (cycles in ascending start order).
void emit_rotate_left(Circuit &circuit, std::span<const Qubit> reg, unsigned k);

/// Applies gates in order, adding each to `stats` when given. Throws
/// ArgumentError if the circuit is wider than the state.
void apply_circuit(StateVector &state, const Circuit &circuit, GateStats *stats = nullptr);

} // namespace qmine
