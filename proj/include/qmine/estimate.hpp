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
 * Classical vs quantum mining cost projection.
 *
 * Classical search hashes every nonce (2^n evaluations); the quantum search
 * runs floor(pi * sqrt(2^n) / 4) Grover iterations. Wall-clock figures
 * depend on the stated assumptions only.
 */
#pragma once

#include <cstdint>

namespace qmine {

struct ResourceAssumptions {
    double hash_rate = 7.0e6;        ///< classical hashes per second
    double gate_time = 1.0e-9;       ///< seconds per quantum gate
    double gates_per_iteration = 1.0;
};

struct ResourceEstimate {
    double classical_hashes = 0.0;
    double classical_seconds = 0.0;
    double classical_hours = 0.0;
    double classical_days = 0.0;
    std::uint64_t quantum_iterations = 0;
    double quantum_gate_count = 0.0;
    double quantum_seconds = 0.0;
    ResourceAssumptions assumptions;
};

/// Throws ArgumentError for n outside [1, 63] or non-positive rates.
ResourceEstimate estimate_resources(unsigned nonce_bits, const ResourceAssumptions &assumptions);

/// floor(pi * sqrt(2^n) / 4).
std::uint64_t quantum_iterations_for(unsigned nonce_bits);

} // namespace qmine
