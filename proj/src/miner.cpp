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
#include "qmine/miner.hpp"

#include "qmine/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace qmine {

void MiningParams::validate() const {
    hash_params.validate();
    if (difficulty_zeros > hash_params.width) {
        throw ArgumentError("difficulty " + std::to_string(difficulty_zeros) +
                            " exceeds hash width " + std::to_string(hash_params.width));
    }
    if (max_grover_rounds < 1) {
        throw ArgumentError("max_grover_rounds must be at least 1");
    }
}

void prepare(StateVector &state, const RegisterLayout &layout, GateStats *stats) {
    auto put = [&](const Gate &g) {
        state.apply(g);
        if (stats != nullptr) {
            stats->record(g.kind());
        }
    };
    for (Qubit q : layout.nonce) {
        put(Gate::h(q));
    }
    put(Gate::x(layout.functional));
    put(Gate::h(layout.functional));
}

Circuit build_oracle(const RegisterLayout &layout, unsigned zeros) {
    const unsigned m = layout.hash_bits();
    if (zeros > m) {
        throw ArgumentError("oracle difficulty " + std::to_string(zeros) +
                            " exceeds hash width " + std::to_string(m));
    }
    Circuit c(layout.total_qubits(), "oracle");
    if (zeros == 0) {
        c.append(Gate::x(layout.functional));
        return c;
    }
    std::vector<Control> controls;
    for (unsigned i = 0; i < zeros; ++i) {
        controls.push_back({layout.hash[m - 1 - i], Polarity::negative});
    }
    c.append(Gate::mcx(std::move(controls), layout.functional));
    return c;
}

Circuit build_diffusion(const RegisterLayout &layout) {
    const auto &nonce = layout.nonce;
    const std::size_t n = nonce.size();
    if (n == 0) {
        throw ArgumentError("diffusion needs a nonempty nonce register");
    }
    Circuit c(layout.total_qubits(), "diffusion");
    for (Qubit q : nonce) {
        c.append(Gate::h(q));
    }
    for (Qubit q : nonce) {
        c.append(Gate::x(q));
    }
    // Multi-controlled Z on the all-ones state as H . MCX . H on the last
    // nonce qubit; for n = 1 it degenerates to Z = H X H.
    const Qubit last = nonce[n - 1];
    c.append(Gate::h(last));
    if (n == 1) {
        c.append(Gate::x(last));
    } else {
        std::vector<Control> controls;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            controls.push_back({nonce[i], Polarity::positive});
        }
        c.append(Gate::mcx(std::move(controls), last));
    }
    c.append(Gate::h(last));
    for (Qubit q : nonce) {
        c.append(Gate::x(q));
    }
    for (Qubit q : nonce) {
        c.append(Gate::h(q));
    }
    return c;
}

GroverCircuits::GroverCircuits(Circuit hash_circuit, Circuit oracle_circuit,
                               Circuit diffusion_circuit)
    : hash(std::move(hash_circuit)), unhash(invert(hash)), oracle(std::move(oracle_circuit)),
      diffusion(std::move(diffusion_circuit)) {}

GateStats GroverCircuits::per_iteration_counts() const {
    GateStats s = hash.gate_counts();
    s += oracle.gate_counts();
    s += unhash.gate_counts();
    s += diffusion.gate_counts();
    return s;
}

GroverCircuits build_grover_circuits(const RegisterLayout &layout,
                                     std::span<const BitString> header,
                                     const MiningParams &params) {
    params.validate();
    Circuit hash = params.out_of_place_hash
                       ? build_hash_circuit_outofplace(layout, header, params.hash_params)
                       : build_hash_circuit(layout, header, params.hash_params);
    return {std::move(hash), build_oracle(layout, params.difficulty_zeros),
            build_diffusion(layout)};
}

void grover_iteration(StateVector &state, const GroverCircuits &circuits, GateStats *stats) {
    apply_circuit(state, circuits.hash, stats);
    apply_circuit(state, circuits.oracle, stats);
    apply_circuit(state, circuits.unhash, stats);
    apply_circuit(state, circuits.diffusion, stats);
}

void grover_iteration(StateVector &state, const RegisterLayout &, const Circuit &hash_circuit,
                      const Circuit &oracle, const Circuit &diffusion, GateStats *stats) {
    apply_circuit(state, hash_circuit, stats);
    apply_circuit(state, oracle, stats);
    apply_circuit(state, invert(hash_circuit), stats);
    apply_circuit(state, diffusion, stats);
}

namespace {

void check_solution_count(unsigned nonce_bits, std::uint64_t solutions) {
    if (nonce_bits == 0 || nonce_bits > 63) {
        throw ArgumentError("nonce width must be in [1, 63]");
    }
    if (solutions == 0) {
        throw ArgumentError("solution count must be at least 1");
    }
    if (solutions > (std::uint64_t{1} << nonce_bits)) {
        throw ArgumentError("solution count exceeds 2^n");
    }
}

} // namespace

std::uint64_t iteration_count(unsigned nonce_bits, std::uint64_t solutions) {
    check_solution_count(nonce_bits, solutions);
    const std::uint64_t space = std::uint64_t{1} << nonce_bits;
    if (solutions == space) {
        return 0;
    }
    const double ratio = std::ldexp(1.0, static_cast<int>(nonce_bits)) /
                         static_cast<double>(solutions);
    const auto k = static_cast<std::uint64_t>(std::floor(std::numbers::pi / 4.0 * std::sqrt(ratio)));
    return std::max<std::uint64_t>(k, 1);
}

double analytic_success_probability(unsigned nonce_bits, std::uint64_t solutions,
                                    std::uint64_t iterations) {
    check_solution_count(nonce_bits, solutions);
    const double theta = std::asin(std::sqrt(
        static_cast<double>(solutions) / std::ldexp(1.0, static_cast<int>(nonce_bits))));
    const double s = std::sin((2.0 * static_cast<double>(iterations) + 1.0) * theta);
    return s * s;
}

double nonce_set_probability(const StateVector &state, const RegisterLayout &layout,
                             std::span<const std::uint64_t> nonces) {
    double total = 0.0;
    for (std::uint64_t v : nonces) {
        total += state.probability_of(assign_register(layout.nonce, v));
    }
    return total;
}

double ancilla_leakage(const StateVector &state, const RegisterLayout &layout) {
    BitAssignment zeros;
    for (Qubit q : layout.hash) {
        zeros.push_back({q, false});
    }
    for (Qubit q : layout.service) {
        zeros.push_back({q, false});
    }
    return std::max(0.0, state.norm_squared() - state.probability_of(zeros));
}

namespace {

struct Readout {
    std::uint64_t nonce = 0;
    Digest digest;
    bool passes = false;
    double solution_mass = 0.0;
};

class QuantumMiner {
  public:
    QuantumMiner(std::span<const BitString> header, const RegisterLayout &layout,
                 const MiningParams &params)
        : header_(header), layout_(layout), params_(params),
          circuits_(build_grover_circuits(layout, header, params)), rng_(params.rng_seed) {}

    Readout run_round(std::uint64_t iterations, MiningResult &result) {
        StateVector state(layout_.total_qubits(), params_.qubit_cap);
        prepare(state, layout_, &result.gate_stats);
        for (std::uint64_t k = 0; k < iterations; ++k) {
            grover_iteration(state, circuits_, &result.gate_stats);
        }
        result.grover_iterations_used += iterations;
        ++result.measurement_rounds;

        Readout out;
        out.solution_mass = solution_mass(state);
        if (params_.exact_readout) {
            const std::vector<double> dist = state.register_distribution(layout_.nonce);
            out.nonce = static_cast<std::uint64_t>(
                std::max_element(dist.begin(), dist.end()) - dist.begin());
        } else {
            out.nonce = state.measure_register(layout_.nonce, rng_).value();
        }
        out.digest = hash_with_nonce(header_, out.nonce, params_.hash_params);
        out.passes = out.digest.leading_zeros_at_least(params_.difficulty_zeros);
        ++result.hashes_tried;
        return out;
    }

    std::mt19937_64 &rng() { return rng_; }

  private:
    // Diagnostic only: evaluates the oracle predicate's probability by
    // hashing forward and back on the same state; not counted in stats.
    double solution_mass(StateVector &state) const {
        apply_circuit(state, circuits_.hash);
        const unsigned m = layout_.hash_bits();
        BitAssignment top;
        for (unsigned i = 0; i < params_.difficulty_zeros; ++i) {
            top.push_back({layout_.hash[m - 1 - i], false});
        }
        const double p = state.probability_of(top);
        apply_circuit(state, circuits_.unhash);
        return p;
    }

    std::span<const BitString> header_;
    const RegisterLayout &layout_;
    const MiningParams &params_;
    GroverCircuits circuits_;
    std::mt19937_64 rng_;
};

} // namespace

MiningResult mine_quantum(std::span<const BitString> header, const RegisterLayout &layout,
                          const MiningParams &params) {
    params.validate();
    layout.validate();
    if (layout.total_qubits() > std::min(params.qubit_cap, StateVector::hard_qubit_cap)) {
        throw CapacityError("layout needs " + std::to_string(layout.total_qubits()) +
                            " qubits, qubit cap is " +
                            std::to_string(std::min(params.qubit_cap, StateVector::hard_qubit_cap)));
    }
    QuantumMiner miner(header, layout, params);
    MiningResult result;
    const unsigned n = layout.nonce_bits();

    auto finish = [&](const Readout &r) {
        result.nonce = r.nonce;
        result.digest = r.digest;
        result.success = r.passes;
        result.success_probability_at_measurement = r.solution_mass;
        result.total_gates = result.gate_stats.total;
        return result;
    };

    if (params.solution_count_hint) {
        return finish(miner.run_round(iteration_count(n, *params.solution_count_hint), result));
    }

    // Unknown solution count: round t draws its iteration count uniformly
    // below min(ceil(c^t), ceil(sqrt(2^n))) with c = 6/5.
    const double space_sqrt = std::sqrt(std::ldexp(1.0, static_cast<int>(n)));
    const auto cap = static_cast<std::uint64_t>(std::ceil(space_sqrt));
    const std::uint64_t limit =
        params.max_grover_rounds *
        static_cast<std::uint64_t>(std::ceil(std::numbers::pi / 4.0 * space_sqrt));
    const std::uint64_t max_rounds = 4 * limit + 16;
    constexpr double growth = 6.0 / 5.0;
    double lambda = 1.0;
    Readout last;
    for (std::uint64_t t = 0; t < max_rounds; ++t) {
        const std::uint64_t budget =
            std::min(cap, static_cast<std::uint64_t>(std::ceil(lambda - 1e-9)));
        const std::uint64_t k =
            std::uniform_int_distribution<std::uint64_t>(0, budget - 1)(miner.rng());
        last = miner.run_round(k, result);
        if (last.passes || result.grover_iterations_used > limit) {
            break;
        }
        lambda *= growth;
    }
    return finish(last);
}

} // namespace qmine
