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
#include "qmine/estimate.hpp"

#include "qmine/errors.hpp"

#include <cmath>
#include <numbers>

namespace qmine {

std::uint64_t quantum_iterations_for(unsigned nonce_bits) {
    if (nonce_bits == 0 || nonce_bits > 63) {
        throw ArgumentError("nonce width must be in [1, 63]");
    }
    const double root = std::sqrt(std::ldexp(1.0, static_cast<int>(nonce_bits)));
    return static_cast<std::uint64_t>(std::floor(std::numbers::pi * root / 4.0));
}

ResourceEstimate estimate_resources(unsigned nonce_bits, const ResourceAssumptions &assumptions) {
    if (!(assumptions.hash_rate > 0.0) || !(assumptions.gate_time > 0.0) ||
        !(assumptions.gates_per_iteration > 0.0)) {
        throw ArgumentError("hash rate, gate time and gates per iteration must be positive");
    }
    ResourceEstimate e;
    e.assumptions = assumptions;
    e.quantum_iterations = quantum_iterations_for(nonce_bits);
    e.classical_hashes = std::ldexp(1.0, static_cast<int>(nonce_bits));
    e.classical_seconds = e.classical_hashes / assumptions.hash_rate;
    e.classical_hours = e.classical_seconds / 3600.0;
    e.classical_days = e.classical_hours / 24.0;
    e.quantum_gate_count =
        static_cast<double>(e.quantum_iterations) * assumptions.gates_per_iteration;
    e.quantum_seconds = e.quantum_gate_count * assumptions.gate_time;
    return e;
}

} // namespace qmine
