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
//
// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include "qmine/chain.hpp"
#include "qmine/circuit.hpp"
#include "qmine/estimate.hpp"
#include "qmine/miner.hpp"
#include "qmine/toyhash.hpp"
#include "test_support.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace {

using namespace qmine;

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Instance {
    std::vector<BitString> header;
    HashParams hash;
    unsigned zeros = 0;
    std::vector<std::uint64_t> solutions;
};

std::vector<BitString> random_header(std::mt19937_64 &rng, unsigned width) {
    std::vector<BitString> header;
    for (int b = 0; b < 4; ++b) {
        header.push_back(BitString::truncate(rng(), width));
    }
    return header;
}

/// Random header with exactly `count` solutions. Which counts are reachable
/// depends on the permutation, so rounds and difficulty are searched too.
std::optional<Instance> find_instance(unsigned n, unsigned m, std::size_t count,
                                      std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (unsigned rounds = 1; rounds <= 4; ++rounds) {
        HashParams hp;
        hp.width = m;
        hp.rounds = rounds;
        for (unsigned z = std::min(m, n + 1);; --z) {
            for (int attempt = 0; attempt < 256; ++attempt) {
                auto header = random_header(rng, m);
                auto sol = solution_set(header, n, z, hp);
                if (sol.size() == count) {
                    return Instance{std::move(header), hp, z, std::move(sol)};
                }
            }
            if (z == 0) {
                break;
            }
        }
    }
    return std::nullopt;
}

MiningParams params_for(const Instance &inst) {
    MiningParams mp;
    mp.hash_params = inst.hash;
    mp.difficulty_zeros = inst.zeros;
    return mp;
}

/// Success probability after each of k = 0..k_max iterations.
std::vector<double> simulate_curve(const Instance &inst, unsigned n, std::uint64_t k_max) {
    const RegisterLayout layout = RegisterLayout::make(n, inst.hash.width);
    const GroverCircuits circuits = build_grover_circuits(layout, inst.header, params_for(inst));
    StateVector state(layout.total_qubits());
    prepare(state, layout);
    std::vector<double> curve{nonce_set_probability(state, layout, inst.solutions)};
    for (std::uint64_t k = 1; k <= k_max; ++k) {
        grover_iteration(state, circuits);
        curve.push_back(nonce_set_probability(state, layout, inst.solutions));
    }
    return curve;
}

std::string fmt(const char *f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Outcome grover_matches_analytic() {
    double worst = 0.0;
    int cases = 0;
    for (unsigned n = 2; n <= 8; ++n) {
        const unsigned m = std::max(4U, n + 2);
        for (std::size_t count : {1U, 2U, 4U}) {
            if (count > (std::size_t{1} << n)) {
                continue;
            }
            const auto inst = find_instance(n, m, count, 1000 * n + count);
            if (!inst) {
                return {false, fmt("no header with %zu solutions at n=%u m=%u", count, n, m)};
            }
            const auto k_opt = iteration_count(n, count);
            const auto curve = simulate_curve(*inst, n, k_opt);
            for (std::uint64_t k = 0; k <= k_opt; ++k) {
                worst = std::max(worst,
                                 std::abs(curve[k] - analytic_success_probability(n, count, k)));
            }
            ++cases;
        }
    }
    const auto exact = find_instance(2, 4, 1, 7);
    if (!exact) {
        return {false, "no unique-solution header at n=2"};
    }
    const double p_exact = simulate_curve(*exact, 2, 1)[1];
    const bool pass = worst < 1e-9 && std::abs(p_exact - 1.0) < 1e-10;
    return {pass, fmt("%d (n,M) cases, max |sim-analytic|=%.3g; n=2 M=1 k=1 p=%.15f", cases,
                      worst, p_exact)};
}

Outcome uncompute_leaves_ancillas_clean() {
    double worst = 0.0;
    int iterations = 0;
    std::mt19937_64 rng(2);
    auto run = [&](unsigned n, const HashParams &hp, unsigned service, bool out_of_place) {
        const RegisterLayout layout = RegisterLayout::make(n, hp.width, service);
        MiningParams mp;
        mp.hash_params = hp;
        mp.difficulty_zeros = std::min(hp.width, n + 1);
        mp.out_of_place_hash = out_of_place;
        const auto header = random_header(rng, hp.width);
        const GroverCircuits circuits = build_grover_circuits(layout, header, mp);
        StateVector state(layout.total_qubits());
        prepare(state, layout);
        const std::uint64_t k_max = iteration_count(n, 1) + 2;
        for (std::uint64_t k = 0; k < k_max; ++k) {
            grover_iteration(state, circuits);
            worst = std::max(worst, ancilla_leakage(state, layout));
            ++iterations;
        }
    };
    for (unsigned n = 1; n <= 6; ++n) {
        for (unsigned m = std::max(4U, n); m <= 10; m += 2) {
            for (unsigned rounds : {1U, 3U}) {
                HashParams hp;
                hp.width = m;
                hp.rounds = rounds;
                run(n, hp, 0, false);
            }
        }
    }
    for (unsigned n = 1; n <= 4; ++n) {
        HashParams hp;
        hp.width = 4;
        hp.rounds = 1;
        run(n, hp, 4, true);
    }
    return {worst < 1e-12,
            fmt("%d iterations checked, max ancilla mass=%.3g", iterations, worst)};
}

Outcome hash_circuit_matches_classical() {
    struct Config {
        unsigned n, m, rounds;
    };
    std::mt19937_64 rng(3);
    int headers = 0;
    double worst = 0.0;
    std::uint64_t mismatches = 0;
    for (const Config c : {Config{4, 8, 2}, Config{6, 10, 3}}) {
        HashParams hp;
        hp.width = c.m;
        hp.rounds = c.rounds;
        const RegisterLayout layout = RegisterLayout::make(c.n, c.m);
        for (int h = 0; h < 20; ++h) {
            const auto header = random_header(rng, c.m);
            Circuit circuit(layout.total_qubits(), "uniform");
            for (Qubit q : layout.nonce) {
                circuit.append(Gate::h(q));
            }
            circuit.append(build_hash_circuit(layout, header, hp));
            StateVector state(layout.total_qubits());
            apply_circuit(state, circuit);
            const double expected = 1.0 / static_cast<double>(std::uint64_t{1} << c.n);
            for (std::uint64_t v = 0; v < (std::uint64_t{1} << c.n); ++v) {
                const Digest d = hash_with_nonce(header, v, hp);
                BitAssignment want = assign_register(layout.nonce, v);
                const BitAssignment digest = assign_register(layout.hash, d.value());
                want.insert(want.end(), digest.begin(), digest.end());
                const double dev = std::abs(state.probability_of(want) - expected);
                worst = std::max(worst, dev);
                mismatches += dev > 1e-12 ? 1 : 0;
            }
            ++headers;
        }
    }
    return {mismatches == 0, fmt("%d headers, all nonces, %llu mismatches, max dev=%.3g", headers,
                                 static_cast<unsigned long long>(mismatches), worst)};
}

Outcome miner_agrees_with_classical() {
    std::mt19937_64 rng(4);
    int runs = 0;
    int found = 0;
    int outside = 0;
    for (unsigned n = 2; n <= 6; ++n) {
        const unsigned m = n + 3;
        HashParams hp;
        hp.width = m;
        hp.rounds = 2;
        const RegisterLayout layout = RegisterLayout::make(n, m);
        for (unsigned z = 1; z <= m; ++z) {
            for (int trial = 0; trial < 3; ++trial) {
                const auto header = random_header(rng, m);
                const auto sol = solution_set(header, n, z, hp);
                if (sol.empty()) {
                    continue;
                }
                MiningParams mp;
                mp.hash_params = hp;
                mp.difficulty_zeros = z;
                mp.rng_seed = rng();
                const MiningResult r = mine_quantum(header, layout, mp);
                ++runs;
                if (r.success) {
                    ++found;
                    const bool member = std::binary_search(sol.begin(), sol.end(), r.nonce);
                    outside += member ? 0 : 1;
                }
            }
        }
    }

    const auto unique = find_instance(4, 8, 1, 44);
    if (!unique) {
        return {false, "no unique-solution header at n=4"};
    }
    const RegisterLayout layout = RegisterLayout::make(4, 8);
    MiningParams mp = params_for(*unique);
    mp.solution_count_hint = 1;
    mp.exact_readout = true;
    const MiningResult exact = mine_quantum(unique->header, layout, mp);
    bool sampled_equal = true;
    double sampled_p_min = 1.0;
    mp.exact_readout = false;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        mp.rng_seed = seed;
        const MiningResult r = mine_quantum(unique->header, layout, mp);
        sampled_equal = sampled_equal && r.success && r.nonce == unique->solutions.front();
        sampled_p_min = std::min(sampled_p_min, r.success_probability_at_measurement);
    }
    const double p = exact.success_probability_at_measurement;
    const bool pass = outside == 0 && found > 0 && exact.success &&
                      exact.nonce == unique->solutions.front() && p >= 0.96 &&
                      std::abs(p - 0.9616) <= 1e-3 && sampled_equal && sampled_p_min >= 0.96;
    return {pass, fmt("%d/%d runs found a nonce, %d outside solution set; unique n=4: nonce=%llu "
                      "expected=%llu p=%.6f",
                      found, runs, outside, static_cast<unsigned long long>(exact.nonce),
                      static_cast<unsigned long long>(unique->solutions.front()), p)};
}

Outcome difficulty_formula() {
    const unsigned z48 = compute_required_zeros(48, 256);
    int wrong = 0;
    int pairs = 0;
    for (unsigned m = 2; m <= 256; ++m) {
        for (unsigned n = 1; n < m; ++n) {
            wrong += compute_required_zeros(n, m) == n + 1 ? 0 : 1;
            ++pairs;
        }
    }
    return {z48 == 49 && wrong == 0,
            fmt("compute_required_zeros(48,256)=%u; %d/%d (n,m) pairs give n+1", z48,
                pairs - wrong, pairs)};
}

Outcome resource_estimate() {
    ResourceAssumptions a;
    a.hash_rate = 7e6;
    const ResourceEstimate e = estimate_resources(48, a);
    const double rel = std::abs(static_cast<double>(e.quantum_iterations) - 13e6) / 13e6;
    const bool pass = e.classical_days >= 460.0 && e.classical_days <= 470.0 &&
                      e.quantum_iterations == 13176794ULL && rel <= 0.02;
    return {pass, fmt("classical %.2f days; quantum iterations %llu (%.2f%% from 13e6)",
                      e.classical_days, static_cast<unsigned long long>(e.quantum_iterations),
                      100.0 * rel)};
}

/// Runs `circuit` on every basis input and compares with `expected`.
int truth_table_errors(const Circuit &circuit,
                       const std::function<BasisIndex(BasisIndex)> &expected) {
    int errors = 0;
    const unsigned q = circuit.num_qubits();
    for (BasisIndex in = 0; in < (BasisIndex{1} << q); ++in) {
        StateVector s = testing::basis_state(q, in);
        apply_circuit(s, circuit);
        errors += testing::basis_of(s) == static_cast<long long>(expected(in)) ? 0 : 1;
    }
    return errors;
}

Outcome reversible_primitives() {
    int errors = 0;
    int tables = 0;
    auto bit = [](BasisIndex x, unsigned i) { return (x >> i) & 1U; };

    Circuit xr(3, "xor");
    emit_xor_into(xr, 0, 1, 2);
    errors += truth_table_errors(xr, [&](BasisIndex x) {
        return x ^ ((bit(x, 0) ^ bit(x, 1)) << 2);
    });
    Circuit an(3, "and");
    emit_and_into(an, 0, 1, 2);
    errors += truth_table_errors(an, [&](BasisIndex x) {
        return x ^ ((bit(x, 0) & bit(x, 1)) << 2);
    });
    Circuit nt(2, "not");
    emit_not(nt, 1);
    errors += truth_table_errors(nt, [](BasisIndex x) { return x ^ 2U; });
    tables += 3;

    for (unsigned len = 1; len <= 6; ++len) {
        std::vector<Qubit> reg(len);
        for (unsigned i = 0; i < len; ++i) {
            reg[i] = i;
        }
        for (unsigned k = 0; k < len; ++k) {
            Circuit rot(len, "rotate");
            emit_rotate_left(rot, reg, k);
            errors += truth_table_errors(rot, [&](BasisIndex x) {
                BasisIndex out = 0;
                for (unsigned i = 0; i < len; ++i) {
                    out |= static_cast<BasisIndex>(bit(x, (i + len - k) % len)) << i;
                }
                return out;
            });
            ++tables;
        }
    }

    std::mt19937_64 rng(7);
    double worst = 0.0;
    int circuits = 0;
    for (unsigned q = 1; q <= 10; ++q) {
        for (int t = 0; t < 5; ++t) {
            const Circuit c = testing::random_circuit(q, 100, rng);
            StateVector s(q);
            testing::load_random_state(s, rng);
            const std::vector<Amplitude> before(s.amplitudes().begin(), s.amplitudes().end());
            apply_circuit(s, c);
            apply_circuit(s, invert(c));
            worst = std::max(worst, testing::max_deviation(before, s.amplitudes()));
            ++circuits;
        }
    }
    return {errors == 0 && worst < 1e-10,
            fmt("%d truth tables, %d wrong rows; %d random 100-gate circuits, max dev=%.3g",
                tables, errors, circuits, worst)};
}

Outcome overshoot() {
    const auto inst = find_instance(8, 10, 1, 88);
    if (!inst) {
        return {false, "no unique-solution header at n=8"};
    }
    const auto curve = simulate_curve(*inst, 8, 25);
    const auto peak = std::max_element(curve.begin(), curve.end()) - curve.begin();
    return {curve[25] < curve[12],
            fmt("p(12)=%.6f p(25)=%.6f, peak at k=%td", curve[12], curve[25], peak)};
}

} // namespace

int main() {
    using Check = Outcome (*)();
    const std::pair<const char *, Check> criteria[] = {
        {"grover success probability matches analytic law", grover_matches_analytic},
        {"uncompute returns hash and service registers to zero", uncompute_leaves_ancillas_clean},
        {"hash circuit equals classical hash", hash_circuit_matches_classical},
        {"quantum miner agrees with classical miner", miner_agrees_with_classical},
        {"required zeros equals n+1", difficulty_formula},
        {"resource estimate at n=48", resource_estimate},
        {"reversible primitives and circuit inversion", reversible_primitives},
        {"overshoot past the optimal iteration count", overshoot},
    };
    int failures = 0;
    int index = 0;
    for (const auto &[name, check] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %d: %s - %s (%s) [%.2fs]\n", index, o.pass ? "PASS" : "FAIL", name,
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    }
    std::printf("%d/%d criteria passed\n", index - failures, index);
    return failures == 0 ? 0 : 1;
}
