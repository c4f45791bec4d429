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
 * Grover-based nonce search over the toy sponge hash.
 *
 * One iteration runs the hash circuit forward, marks states whose top z
 * hash bits are zero by phase kickback onto the functional qubit (held in
 * |->), runs the hash circuit inverted so that the hash and service
 * registers return to |0...0>, and finally reflects the nonce register
 * about its uniform superposition.
 */
#pragma once

#include "qmine/bitstring.hpp"
#include "qmine/circuit.hpp"
#include "qmine/layout.hpp"
#include "qmine/statevector.hpp"
#include "qmine/toyhash.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qmine {

struct MiningParams {
    unsigned difficulty_zeros = 0;
    HashParams hash_params;
    /// Unknown-count search stops once cumulative iterations exceed
    /// max_grover_rounds * ceil(pi/4 * sqrt(2^n)).
    unsigned max_grover_rounds = 8;
    std::optional<std::uint64_t> solution_count_hint;
    std::uint64_t rng_seed = 0;
    /// Read out the most probable nonce instead of sampling.
    bool exact_readout = false;
    /// Use the service-register hash construction (m <= 4, r = 1 only).
    bool out_of_place_hash = false;
    unsigned qubit_cap = StateVector::default_qubit_cap;

    void validate() const;
};

struct MiningResult {
    std::uint64_t nonce = 0;
    Digest digest;
    bool success = false;
    std::uint64_t grover_iterations_used = 0;
    /// Probability mass on passing nonces at the final readout.
    double success_probability_at_measurement = 0.0;
    std::uint64_t total_gates = 0;
    GateStats gate_stats;
    /// Classical hashes evaluated (brute force) or readouts verified (quantum).
    std::uint64_t hashes_tried = 0;
    /// Number of prepare/iterate/measure rounds (quantum only).
    unsigned measurement_rounds = 0;
};

/// H on every nonce qubit; X then H on the functional qubit.
void prepare(StateVector &state, const RegisterLayout &layout, GateStats *stats = nullptr);

/// Single MCX onto the functional qubit with negative controls on the top
/// z hash qubits; z = 0 gives a plain X. Throws ArgumentError if z > m.
Circuit build_oracle(const RegisterLayout &layout, unsigned zeros);

/// Reflection about the uniform nonce superposition (up to global phase),
/// touching only nonce qubits. Throws ArgumentError for an empty nonce register.
Circuit build_diffusion(const RegisterLayout &layout);

/// Circuits for one iteration, with the inverse hash built once.
struct GroverCircuits {
    Circuit hash;
    Circuit unhash;
    Circuit oracle;
    Circuit diffusion;

    GroverCircuits(Circuit hash_circuit, Circuit oracle_circuit, Circuit diffusion_circuit);

    [[nodiscard]] GateStats per_iteration_counts() const;
};

GroverCircuits build_grover_circuits(const RegisterLayout &layout,
                                     std::span<const BitString> header,
                                     const MiningParams &params);

/// hash, oracle, inverse hash, diffusion.
void grover_iteration(StateVector &state, const GroverCircuits &circuits,
                      GateStats *stats = nullptr);
void grover_iteration(StateVector &state, const RegisterLayout &layout,
                      const Circuit &hash_circuit, const Circuit &oracle,
                      const Circuit &diffusion, GateStats *stats = nullptr);

/// floor(pi/4 * sqrt(2^n / M)), at least 1 unless M = 2^n (then 0).
/// Throws ArgumentError if M is 0 or exceeds 2^n.
std::uint64_t iteration_count(unsigned nonce_bits, std::uint64_t solutions);

/// sin^2((2k + 1) asin(sqrt(M / 2^n))).
double analytic_success_probability(unsigned nonce_bits, std::uint64_t solutions,
                                    std::uint64_t iterations);

/// Total probability on the given nonce values (hash register assumed
/// uncomputed).
double nonce_set_probability(const StateVector &state, const RegisterLayout &layout,
                             std::span<const std::uint64_t> nonces);

/// Probability mass on basis states with any hash or service bit set.
double ancilla_leakage(const StateVector &state, const RegisterLayout &layout);

MiningResult mine_quantum(std::span<const BitString> header, const RegisterLayout &layout,
                          const MiningParams &params);

} // namespace qmine
