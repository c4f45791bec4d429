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
 * ToyKeccak: a small single-rate sponge hash built only from XOR, AND,
 * rotation, and round constants, with a bit-exact classical reference and
 * an equivalent reversible circuit.
 *
 * Round j (0-based) on an m-bit state h, each layer in place with index i
 * ascending (later updates see earlier ones):
 *
 *   chi:     h[i] ^= h[i+1] & h[i+2]       (or ~h[i+1] & h[i+2] with true_chi)
 *   linear:  h[i] ^= h[i+3]
 *   rotate:  new[i] = old[i-1]
 *   iota:    h ^= low m bits of (j+1) * 0x9E3779B9
 *
 * all indices mod m.
 */
#pragma once

#include "qmine/bitstring.hpp"
#include "qmine/circuit.hpp"
#include "qmine/layout.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace qmine {

struct HashParams {
    static constexpr unsigned min_width = 4;
    static constexpr unsigned max_width = 16;
    static constexpr unsigned max_rounds = 8;

    unsigned width = 8;  ///< digest and block width m
    unsigned rounds = 2; ///< permutation rounds r
    bool true_chi = false;

    /// Throws ArgumentError when width or rounds fall outside their ranges.
    void validate() const;

    friend bool operator==(const HashParams &, const HashParams &) = default;
};

inline constexpr std::uint64_t round_constant_seed = 0x9E3779B9;

/// Round constant for round j as an m-bit string.
BitString round_constant(unsigned round, unsigned width);

/// Throws ArgumentError if state.width() != params.width.
BitString permute(const BitString &state, const HashParams &params);

/// Absorbs each block (state ^= block, then permute) from a zero state.
/// Throws ArgumentError for an empty message or mismatched block widths.
Digest hash_classical(std::span<const BitString> blocks, const HashParams &params);

/// hash_classical(header ++ [nonce]) with the nonce as the final block.
Digest hash_with_nonce(std::span<const BitString> header, std::uint64_t nonce,
                       const HashParams &params);

/// Appends one in-place permutation on `hash` (CCNOT, CNOT, SWAP, X only).
void emit_permutation(Circuit &circuit, std::span<const Qubit> hash, const HashParams &params);

/// Reversible circuit mapping |v>|0^m> to |v>|hash_with_nonce(header, v)>
/// for every basis nonce v. No service qubits are used.
/// Throws UnsupportedLayoutError if the nonce register is wider than m or
/// the hash register width differs from params.width.
Circuit build_hash_circuit(const RegisterLayout &layout, std::span<const BitString> header,
                           const HashParams &params);

/// Same map, but each chi-layer AND is first computed into a fresh service
/// qubit, folded into h[i], and uncomputed. Restricted to m <= 4, r = 1 and
/// at least m service qubits.
Circuit build_hash_circuit_outofplace(const RegisterLayout &layout,
                                      std::span<const BitString> header,
                                      const HashParams &params);

} // namespace qmine
