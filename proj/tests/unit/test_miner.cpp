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

#include "qmine/chain.hpp"
#include "qmine/errors.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace qmine {
namespace {

struct Instance {
    std::vector<BitString> header;
    std::vector<std::uint64_t> solutions;
};

/// First random 4-block header whose solution set has exactly `count` members.
Instance find_instance(unsigned n, const HashParams &p, unsigned zeros, std::size_t count,
                       std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<BitString> header;
        for (int b = 0; b < 4; ++b) {
            header.push_back(BitString::truncate(rng(), p.width));
        }
        auto sol = solution_set(header, n, zeros, p);
        if (sol.size() == count) {
            return {header, sol};
        }
    }
    ADD_FAILURE() << "no instance found";
    return {};
}

MiningParams params_for(const HashParams &p, unsigned zeros) {
    MiningParams mp;
    mp.hash_params = p;
    mp.difficulty_zeros = zeros;
    return mp;
}

TEST(Prepare, UniformNonceAndMinusFunctional) {
    const RegisterLayout layout = RegisterLayout::make(2, 4);
    StateVector s(layout.total_qubits());
    prepare(s, layout);
    for (std::uint64_t v = 0; v < 4; ++v) {
        EXPECT_NEAR(s.probability_of(assign_register(layout.nonce, v)), 0.25, 1e-15);
    }
    EXPECT_NEAR(s.probability_of({{layout.functional, false}}), 0.5, 1e-15);
    EXPECT_NEAR(s.probability_of({{layout.functional, true}}), 0.5, 1e-15);
    EXPECT_NEAR(s.probability_of(assign_register(layout.hash, 0)), 1.0, 1e-15);
    // |-> = (|0> - |1>)/sqrt2: relative sign negative
    const BasisIndex f = BasisIndex{1} << layout.functional;
    EXPECT_LT(s[f].real() * s[0].real(), 0.0);
}

TEST(Oracle, NegativeControlsMarkTopZeroHashes) {
    // n = 1, m = 2, z = 1: hash states 00 and 01 (top bit 0) acquire phase -1.
    const RegisterLayout layout = RegisterLayout::make(1, 2);
    const Circuit oracle = build_oracle(layout, 1);
    ASSERT_EQ(oracle.size(), 1U);
    EXPECT_EQ(oracle.gates()[0].to_string(), "MCX 3 [-2]");
    for (std::uint64_t h = 0; h < 4; ++h) {
        StateVector s(layout.total_qubits());
        for (unsigned i = 0; i < 2; ++i) {
            if ((h >> i) & 1U) {
                s.apply(Gate::x(layout.hash[i]));
            }
        }
        s.apply(Gate::x(layout.functional));
        s.apply(Gate::h(layout.functional));
        const StateVector before = s;
        apply_circuit(s, oracle);
        const double sign = h < 2 ? -1.0 : 1.0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            EXPECT_NEAR(s[i].real(), sign * before[i].real(), 1e-15) << "hash=" << h;
        }
    }
}

TEST(Oracle, ZeroDifficultyIsGlobalPhase) {
    const RegisterLayout layout = RegisterLayout::make(2, 4);
    const Circuit oracle = build_oracle(layout, 0);
    EXPECT_EQ(oracle.gates()[0], Gate::x(layout.functional));
    StateVector s(layout.total_qubits());
    prepare(s, layout);
    const auto before = s.register_distribution(layout.nonce);
    apply_circuit(s, oracle);
    const auto after = s.register_distribution(layout.nonce);
    for (std::size_t i = 0; i < before.size(); ++i) {
        EXPECT_NEAR(before[i], after[i], 1e-15);
    }
}

TEST(Oracle, FullDifficultyFlipsAllZeroHashBranch) {
    const RegisterLayout layout = RegisterLayout::make(2, 4);
    StateVector s(layout.total_qubits());
    prepare(s, layout);
    const StateVector before = s;
    apply_circuit(s, build_oracle(layout, 4));
    for (std::size_t i = 0; i < s.size(); ++i) {
        EXPECT_NEAR(s[i].real(), -before[i].real(), 1e-15);
    }
    EXPECT_THROW(build_oracle(layout, 5), ArgumentError);
}

TEST(Diffusion, UniformSuperpositionIsFixed) {
    const RegisterLayout layout = RegisterLayout::make(3, 4);
    StateVector s(layout.total_qubits());
    for (Qubit q : layout.nonce) {
        s.apply(Gate::h(q));
    }
    const StateVector before = s;
    apply_circuit(s, build_diffusion(layout));
    const Amplitude phase = s[0] / before[0];
    EXPECT_NEAR(std::abs(phase), 1.0, 1e-12);
    for (std::size_t i = 0; i < s.size(); ++i) {
        EXPECT_LT(std::abs(s[i] - phase * before[i]), 1e-12);
    }
}

TEST(Diffusion, ReflectsBasisStateAboutUniform) {
    const RegisterLayout layout = RegisterLayout::make(2, 4);
    StateVector s(layout.total_qubits());
    apply_circuit(s, build_diffusion(layout));
    // Expected (2|s><s| - I)|00> = -0.5|00> + 0.5(|01> + |10> + |11>), up to phase.
    const double phase = s[0].real() / -0.5;
    EXPECT_NEAR(std::abs(phase), 1.0, 1e-12);
    EXPECT_NEAR(s[1].real(), 0.5 * phase, 1e-12);
    EXPECT_NEAR(s[2].real(), 0.5 * phase, 1e-12);
    EXPECT_NEAR(s[3].real(), 0.5 * phase, 1e-12);
}

TEST(Diffusion, IsInvolutionAndTouchesOnlyNonce) {
    std::mt19937_64 rng(41);
    for (unsigned n = 1; n <= 5; ++n) {
        const RegisterLayout layout = RegisterLayout::make(n, 4);
        const Circuit d = build_diffusion(layout);
        for (const Gate &g : d.gates()) {
            for (Qubit q : g.qubits()) {
                EXPECT_LT(q, n);
            }
        }
        StateVector s(layout.total_qubits());
        testing::load_random_state(s, rng);
        const StateVector before = s;
        apply_circuit(s, d);
        apply_circuit(s, d);
        EXPECT_LT(testing::max_deviation(s.amplitudes(), before.amplitudes()), 1e-12);
    }
}

TEST(IterationCount, Examples) {
    EXPECT_EQ(iteration_count(8, 1), 12U);
    EXPECT_EQ(iteration_count(2, 1), 1U);
    EXPECT_EQ(iteration_count(48, 1), 13176794U);
    EXPECT_EQ(iteration_count(3, 8), 0U);
    EXPECT_EQ(iteration_count(2, 3), 1U); // floor is 0, clamped to 1
    EXPECT_THROW(iteration_count(4, 0), ArgumentError);
    EXPECT_THROW(iteration_count(2, 5), ArgumentError);
}

TEST(AnalyticProbability, Examples) {
    EXPECT_NEAR(analytic_success_probability(2, 1, 1), 1.0, 1e-15);
    EXPECT_NEAR(analytic_success_probability(8, 1, 12), 0.99994704, 1e-7);
    EXPECT_NEAR(analytic_success_probability(6, 3, 0), 3.0 / 64.0, 1e-15);
}

TEST(GroverIteration, ExactCaseFourNoncesOneSolution) {
    const HashParams p{6, 2};
    const Instance inst = find_instance(2, p, 2, 1, 42);
    const RegisterLayout layout = RegisterLayout::make(2, 6);
    const auto mp = params_for(p, 2);
    const GroverCircuits gc = build_grover_circuits(layout, inst.header, mp);
    StateVector s(layout.total_qubits());
    prepare(s, layout);
    grover_iteration(s, layout, gc.hash, gc.oracle, gc.diffusion);
    EXPECT_NEAR(nonce_set_probability(s, layout, inst.solutions), 1.0, 1e-10);
    EXPECT_NEAR(s.probability_of(assign_register(layout.hash, 0)), 1.0, 1e-12);
}

TEST(GroverIteration, ZeroDifficultyKeepsUniformNonce) {
    const HashParams p{6, 2};
    const RegisterLayout layout = RegisterLayout::make(3, 6);
    std::mt19937_64 rng(43);
    std::vector<BitString> header{BitString::truncate(rng(), 6)};
    const GroverCircuits gc = build_grover_circuits(layout, header, params_for(p, 0));
    StateVector s(layout.total_qubits());
    prepare(s, layout);
    for (int k = 0; k < 3; ++k) {
        grover_iteration(s, gc);
        for (double q : s.register_distribution(layout.nonce)) {
            EXPECT_NEAR(q, 1.0 / 8.0, 1e-12);
        }
    }
}

TEST(GroverProperty, SimulatedMatchesAnalyticSmall) {
    const HashParams p{8, 2};
    for (unsigned n = 2; n <= 5; ++n) {
        for (std::size_t count : {1U, 2U}) {
            const unsigned zeros = n + 1 - (count == 2 ? 1 : 0);
            const Instance inst = find_instance(n, p, zeros, count, 100 + n);
            const RegisterLayout layout = RegisterLayout::make(n, 8);
            const GroverCircuits gc = build_grover_circuits(layout, inst.header, params_for(p, zeros));
            StateVector s(layout.total_qubits());
            prepare(s, layout);
            const std::uint64_t k_opt = iteration_count(n, count);
            for (std::uint64_t k = 0; k <= k_opt; ++k) {
                if (k > 0) {
                    grover_iteration(s, gc);
                }
                EXPECT_NEAR(nonce_set_probability(s, layout, inst.solutions),
                            analytic_success_probability(n, count, k), 1e-9)
                    << "n=" << n << " M=" << count << " k=" << k;
                EXPECT_LT(ancilla_leakage(s, layout), 1e-12);
            }
        }
    }
}

TEST(GroverProperty, MarkedBranchesEqualClassicalSolutionSet) {
    const HashParams p{8, 2};
    std::mt19937_64 rng(44);
    for (unsigned n = 1; n <= 6; ++n) {
        std::vector<BitString> header;
        for (int b = 0; b < 4; ++b) {
            header.push_back(BitString::truncate(rng(), 8));
        }
        const unsigned zeros = std::min(8U, n);
        const RegisterLayout layout = RegisterLayout::make(n, 8);
        const GroverCircuits gc = build_grover_circuits(layout, header, params_for(p, zeros));
        StateVector s(layout.total_qubits());
        prepare(s, layout);
        apply_circuit(s, gc.hash);
        apply_circuit(s, gc.oracle);
        apply_circuit(s, gc.unhash);
        const auto expected = solution_set(header, n, zeros, p);
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            // functional = 0 component carries +1/sqrt(2^(n+1)) unless marked.
            const bool marked = s[v].real() < 0.0;
            const bool in_set = std::binary_search(expected.begin(), expected.end(), v);
            EXPECT_EQ(marked, in_set) << "n=" << n << " v=" << v;
        }
    }
}

TEST(GroverProperty, ProbabilityRisesToOptimumThenFalls) {
    const HashParams p{8, 2};
    const unsigned n = 6;
    const Instance inst = find_instance(n, p, 7, 1, 45);
    const RegisterLayout layout = RegisterLayout::make(n, 8);
    const GroverCircuits gc = build_grover_circuits(layout, inst.header, params_for(p, 7));
    StateVector s(layout.total_qubits());
    prepare(s, layout);
    const std::uint64_t k_opt = iteration_count(n, 1);
    double prev = nonce_set_probability(s, layout, inst.solutions);
    for (std::uint64_t k = 1; k <= k_opt; ++k) {
        grover_iteration(s, gc);
        const double now = nonce_set_probability(s, layout, inst.solutions);
        EXPECT_GE(now, prev - 1e-12) << "k=" << k;
        prev = now;
    }
    grover_iteration(s, gc);
    grover_iteration(s, gc);
    EXPECT_LT(nonce_set_probability(s, layout, inst.solutions), prev);
}

TEST(GroverProperty, FunctionalQubitStaysSeparable) {
    const HashParams p{8, 2};
    const unsigned n = 4;
    const Instance inst = find_instance(n, p, 4, 2, 46);
    const RegisterLayout layout = RegisterLayout::make(n, 8);
    const GroverCircuits gc = build_grover_circuits(layout, inst.header, params_for(p, 4));
    StateVector s(layout.total_qubits());
    prepare(s, layout);
    for (int k = 0; k < 3; ++k) {
        grover_iteration(s, gc);
        const double p1 = s.probability_of({{layout.functional, true}});
        EXPECT_NEAR(p1, 0.5, 1e-12);
        for (std::uint64_t v = 0; v < 16; ++v) {
            BitAssignment a = assign_register(layout.nonce, v);
            const double marginal = s.probability_of(a);
            a.push_back({layout.functional, false});
            const double joint0 = s.probability_of(a);
            EXPECT_NEAR(joint0, 0.5 * marginal, 1e-12);
        }
    }
}

TEST(MineQuantum, UniqueSolutionWithHint) {
    const HashParams p{8, 2};
    const Instance inst = find_instance(4, p, 4, 1, 47);
    const RegisterLayout layout = RegisterLayout::make(4, 8);
    MiningParams mp = params_for(p, 4);
    mp.solution_count_hint = 1;
    mp.exact_readout = true;
    const MiningResult r = mine_quantum(inst.header, layout, mp);
    EXPECT_TRUE(r.success);
    EXPECT_EQ(r.nonce, inst.solutions[0]);
    EXPECT_EQ(r.grover_iterations_used, 3U);
    EXPECT_NEAR(r.success_probability_at_measurement, 0.96131897, 1e-8);
    EXPECT_EQ(r.digest, hash_with_nonce(inst.header, r.nonce, p));
    const MiningResult classical = mine_classical(inst.header, 4, mp);
    EXPECT_EQ(classical.nonce, r.nonce);
    // prepare (4 H + X + H) plus three full iterations
    const GroverCircuits gc = build_grover_circuits(layout, inst.header, mp);
    EXPECT_EQ(r.total_gates, 6 + 3 * gc.per_iteration_counts().total);
}

TEST(MineQuantum, ZeroDifficultySucceedsFirstSample) {
    const HashParams p{8, 2};
    const std::vector<BitString> header{BitString(0x12, 8)};
    const RegisterLayout layout = RegisterLayout::make(4, 8);
    MiningParams mp = params_for(p, 0);
    mp.rng_seed = 9;
    const MiningResult r = mine_quantum(header, layout, mp);
    EXPECT_TRUE(r.success);
    EXPECT_EQ(r.measurement_rounds, 1U);
    EXPECT_NEAR(r.success_probability_at_measurement, 1.0, 1e-12);
}

TEST(MineQuantum, NoSolutionExhaustsBudget) {
    const HashParams p{8, 2};
    const Instance inst = find_instance(4, p, 8, 0, 48);
    ASSERT_TRUE(inst.solutions.empty());
    const RegisterLayout layout = RegisterLayout::make(4, 8);
    MiningParams mp = params_for(p, 8);
    mp.max_grover_rounds = 2;
    const MiningResult r = mine_quantum(inst.header, layout, mp);
    EXPECT_FALSE(r.success);
    EXPECT_GT(r.grover_iterations_used, 2U * 4U); // ceil(pi/4 * 4) = 4
    EXPECT_NEAR(r.success_probability_at_measurement, 0.0, 1e-12);
}

TEST(MineQuantum, UnknownCountFindsMemberOfSolutionSet) {
    const HashParams p{8, 2};
    for (unsigned n = 2; n <= 6; ++n) {
        for (std::size_t count : {1U, 3U}) {
            if (count >= (1U << n)) {
                continue;
            }
            const unsigned zeros = count == 1 ? n + 1 : n - 1;
            const Instance inst = find_instance(n, p, zeros, count, 200 + n * 7 + count);
            const RegisterLayout layout = RegisterLayout::make(n, 8);
            for (std::uint64_t seed = 0; seed < 4; ++seed) {
                MiningParams mp = params_for(p, zeros);
                mp.rng_seed = seed;
                const MiningResult r = mine_quantum(inst.header, layout, mp);
                if (r.success) {
                    EXPECT_TRUE(std::binary_search(inst.solutions.begin(), inst.solutions.end(),
                                                   r.nonce));
                }
                EXPECT_EQ(r.success, std::binary_search(inst.solutions.begin(),
                                                        inst.solutions.end(), r.nonce));
            }
        }
    }
}

TEST(MineQuantum, SeededRunsAreReproducible) {
    const HashParams p{8, 2};
    const Instance inst = find_instance(5, p, 5, 2, 49);
    const RegisterLayout layout = RegisterLayout::make(5, 8);
    MiningParams mp = params_for(p, 5);
    mp.rng_seed = 1234;
    const MiningResult a = mine_quantum(inst.header, layout, mp);
    const MiningResult b = mine_quantum(inst.header, layout, mp);
    EXPECT_EQ(a.nonce, b.nonce);
    EXPECT_EQ(a.grover_iterations_used, b.grover_iterations_used);
    EXPECT_EQ(a.total_gates, b.total_gates);
}

TEST(MineQuantum, OutOfPlaceHashVariant) {
    const HashParams p{4, 1};
    const Instance inst = find_instance(2, p, 3, 1, 50);
    const RegisterLayout layout = RegisterLayout::make(2, 4, 4);
    MiningParams mp = params_for(p, 3);
    mp.out_of_place_hash = true;
    mp.solution_count_hint = 1;
    const MiningResult r = mine_quantum(inst.header, layout, mp);
    EXPECT_TRUE(r.success);
    EXPECT_EQ(r.nonce, inst.solutions[0]);
    EXPECT_NEAR(r.success_probability_at_measurement, 1.0, 1e-10);
}

TEST(MineQuantum, CapacityAndParameterErrors) {
    const HashParams p{16, 1};
    const RegisterLayout layout = RegisterLayout::make(12, 16);
    MiningParams mp = params_for(p, 3);
    EXPECT_THROW(mine_quantum({}, layout, mp), CapacityError);
    mp.difficulty_zeros = 17;
    EXPECT_THROW(mine_quantum({}, layout, mp), ArgumentError);
}

} // namespace
} // namespace qmine
