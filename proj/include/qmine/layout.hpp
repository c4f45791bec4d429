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

#include "qmine/gate.hpp"

#include <vector>

namespace qmine {

/// Partition of the simulator qubits: nonce at 0..n-1, hash at n..n+m-1,
/// then service, then the functional qubit last.
struct RegisterLayout {
    std::vector<Qubit> nonce;
    std::vector<Qubit> hash;
    std::vector<Qubit> service;
    Qubit functional = 0;

    /// Throws ArgumentError if n or m is zero.
    static RegisterLayout make(unsigned nonce_bits, unsigned hash_bits, unsigned service_bits = 0);

    [[nodiscard]] unsigned nonce_bits() const noexcept { return static_cast<unsigned>(nonce.size()); }
    [[nodiscard]] unsigned hash_bits() const noexcept { return static_cast<unsigned>(hash.size()); }
    [[nodiscard]] unsigned total_qubits() const noexcept {
        return static_cast<unsigned>(nonce.size() + hash.size() + service.size() + 1);
    }

    /// Checks disjointness and the fixed ordering; throws ArgumentError.
    void validate() const;
};

} // namespace qmine
