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
 * Dense state-vector simulator core.
 */
#pragma once

#include "qmine/gate.hpp"
#include "qmine/kernels.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace qmine {

/// Partial assignment of fixed values to a set of qubits.
struct QubitValue {
    Qubit qubit;
    bool value;
};
using BitAssignment = std::vector<QubitValue>;

/// Assigns the little-endian bits of `value` to `reg` (reg[i] gets bit i).
BitAssignment assign_register(std::span<const Qubit> reg, std::uint64_t value);

struct MeasurementOutcome {
    /// bits[i] is the outcome for register qubit i.
    std::vector<bool> bits;
    double probability = 0.0;

    /// Register value with bits[i] as bit i.
    [[nodiscard]] std::uint64_t value() const;
    /// Leading register qubit first.
    [[nodiscard]] std::string to_string() const;
};

/// 2^q complex amplitudes over q qubits. Basis index b encodes qubit k as
/// bit k of b. A state is owned by one thread at a time.
class StateVector {
  public:
    static constexpr unsigned default_qubit_cap = 26;
    static constexpr unsigned hard_qubit_cap = 28;

    /// |0...0> on `num_qubits` qubits; throws CapacityError unless
    /// 1 <= num_qubits <= qubit_cap (qubit_cap itself may not exceed 28).
    explicit StateVector(unsigned num_qubits, unsigned qubit_cap = default_qubit_cap);

    [[nodiscard]] unsigned num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
    /// Direct write access for loading arbitrary states; caller keeps it normalised.
    [[nodiscard]] std::span<Amplitude> mutable_amplitudes() noexcept { return amps_; }
    [[nodiscard]] Amplitude operator[](BasisIndex i) const { return amps_[i]; }

    /// Throws IndexError for out-of-range or repeated qubits.
    void apply(const Gate &gate);

    /// Sum of |a|^2 over basis states consistent with `assignment`.
    [[nodiscard]] double probability_of(const BitAssignment &assignment) const;
    [[nodiscard]] double norm_squared() const;

    /// Born-rule sample of `reg` without collapsing the state.
    [[nodiscard]] MeasurementOutcome measure_register(std::span<const Qubit> reg,
                                                      std::mt19937_64 &rng) const;
    /// Marginal distribution of `reg`, indexed by register value.
    [[nodiscard]] std::vector<double> register_distribution(std::span<const Qubit> reg) const;

    void use_kernels(kernels::Backend backend) { kernels_ = &kernels::table(backend); }
    [[nodiscard]] kernels::Backend kernel_backend() const noexcept { return kernels_->backend; }

  private:
    void check_qubit(Qubit q) const;

    unsigned num_qubits_;
    std::vector<Amplitude> amps_;
    const kernels::KernelTable *kernels_;
};

StateVector new_zero_state(unsigned num_qubits,
                           unsigned qubit_cap = StateVector::default_qubit_cap);

inline void apply_gate(StateVector &state, const Gate &gate) { state.apply(gate); }

} // namespace qmine
