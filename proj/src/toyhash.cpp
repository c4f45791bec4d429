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
#include "qmine/toyhash.hpp"

#include "qmine/errors.hpp"

#include <string>

namespace qmine {

void HashParams::validate() const {
    if (width < min_width || width > max_width) {
        throw ArgumentError("hash width must be in [4, 16], got " + std::to_string(width));
    }
    if (rounds < 1 || rounds > max_rounds) {
        throw ArgumentError("round count must be in [1, 8], got " + std::to_string(rounds));
    }
}

BitString round_constant(unsigned round, unsigned width) {
    return BitString::truncate((std::uint64_t{round} + 1) * round_constant_seed, width);
}

namespace {

inline std::uint32_t get(std::uint32_t h, unsigned i) { return (h >> i) & 1U; }

std::uint32_t permute_bits(std::uint32_t h, const HashParams &p) {
    const unsigned m = p.width;
    for (unsigned j = 0; j < p.rounds; ++j) {
        for (unsigned i = 0; i < m; ++i) {
            std::uint32_t a = get(h, (i + 1) % m);
            if (p.true_chi) {
                a ^= 1U;
            }
            h ^= (a & get(h, (i + 2) % m)) << i;
        }
        for (unsigned i = 0; i < m; ++i) {
            h ^= get(h, (i + 3) % m) << i;
        }
        std::uint32_t rotated = 0;
        for (unsigned i = 0; i < m; ++i) {
            rotated |= get(h, (i + m - 1) % m) << i;
        }
        h = rotated ^ round_constant(j, m).value();
    }
    return h;
}

void check_block(const BitString &block, const HashParams &params) {
    if (block.width() != params.width) {
        throw ArgumentError("block width " + std::to_string(block.width()) +
                            " does not match hash width " + std::to_string(params.width));
    }
}

} // namespace

BitString permute(const BitString &state, const HashParams &params) {
    params.validate();
    check_block(state, params);
    return {permute_bits(state.value(), params), params.width};
}

Digest hash_classical(std::span<const BitString> blocks, const HashParams &params) {
    params.validate();
    if (blocks.empty()) {
        throw ArgumentError("cannot hash an empty message");
    }
    std::uint32_t state = 0;
    for (const BitString &block : blocks) {
        check_block(block, params);
        state = permute_bits(state ^ block.value(), params);
    }
    return {state, params.width};
}

Digest hash_with_nonce(std::span<const BitString> header, std::uint64_t nonce,
                       const HashParams &params) {
    params.validate();
    std::vector<BitString> blocks(header.begin(), header.end());
    if (nonce >> params.width != 0) {
        throw ArgumentError("nonce " + std::to_string(nonce) + " wider than one block");
    }
    blocks.push_back(BitString::truncate(nonce, params.width));
    return hash_classical(blocks, params);
}

namespace {

template <class AndStep>
void emit_rounds(Circuit &circuit, std::span<const Qubit> h, const HashParams &params,
                 AndStep &&and_step) {
    const unsigned m = params.width;
    for (unsigned j = 0; j < params.rounds; ++j) {
        for (unsigned i = 0; i < m; ++i) {
            and_step(i);
        }
        for (unsigned i = 0; i < m; ++i) {
            circuit.append(Gate::cnot(h[(i + 3) % m], h[i]));
        }
        emit_rotate_left(circuit, h, 1);
        const BitString rc = round_constant(j, m);
        for (unsigned i = 0; i < m; ++i) {
            if (rc.bit(i)) {
                emit_not(circuit, h[i]);
            }
        }
    }
}

Control chi_control(Qubit q, const HashParams &params) {
    return {q, params.true_chi ? Polarity::negative : Polarity::positive};
}

void check_hash_layout(const RegisterLayout &layout, std::span<const BitString> header,
                       const HashParams &params) {
    params.validate();
    layout.validate();
    if (layout.hash_bits() != params.width) {
        throw UnsupportedLayoutError("hash register has " + std::to_string(layout.hash_bits()) +
                                     " qubits, hash width is " + std::to_string(params.width));
    }
    if (layout.nonce_bits() > params.width) {
        throw UnsupportedLayoutError("nonce register (" + std::to_string(layout.nonce_bits()) +
                                     " qubits) does not fit in one " +
                                     std::to_string(params.width) + "-bit block");
    }
    for (const BitString &block : header) {
        check_block(block, params);
    }
}

template <class EmitPermutation>
Circuit build_sponge(const RegisterLayout &layout, std::span<const BitString> header,
                     const HashParams &params, const char *label, EmitPermutation &&emit_perm) {
    Circuit c(layout.total_qubits(), label);
    for (const BitString &block : header) {
        for (unsigned i = 0; i < params.width; ++i) {
            if (block.bit(i)) {
                emit_not(c, layout.hash[i]);
            }
        }
        emit_perm(c);
    }
    for (unsigned i = 0; i < layout.nonce_bits(); ++i) {
        c.append(Gate::cnot(layout.nonce[i], layout.hash[i]));
    }
    emit_perm(c);
    return c;
}

} // namespace

void emit_permutation(Circuit &circuit, std::span<const Qubit> h, const HashParams &params) {
    params.validate();
    if (h.size() != params.width) {
        throw ArgumentError("permutation register width does not match hash width");
    }
    const unsigned m = params.width;
    emit_rounds(circuit, h, params, [&](unsigned i) {
        circuit.append(Gate::mcx({chi_control(h[(i + 1) % m], params), {h[(i + 2) % m]}}, h[i]));
    });
}

Circuit build_hash_circuit(const RegisterLayout &layout, std::span<const BitString> header,
                           const HashParams &params) {
    check_hash_layout(layout, header, params);
    return build_sponge(layout, header, params, "hash", [&](Circuit &c) {
        emit_permutation(c, layout.hash, params);
    });
}

Circuit build_hash_circuit_outofplace(const RegisterLayout &layout,
                                      std::span<const BitString> header,
                                      const HashParams &params) {
    check_hash_layout(layout, header, params);
    if (params.width > 4 || params.rounds != 1) {
        throw UnsupportedLayoutError("out-of-place hash circuit supports only m <= 4 and r = 1");
    }
    if (layout.service.size() < params.width) {
        throw UnsupportedLayoutError("out-of-place hash circuit needs at least m service qubits");
    }
    const auto &h = layout.hash;
    const auto &s = layout.service;
    const unsigned m = params.width;
    return build_sponge(layout, header, params, "hash-outofplace", [&](Circuit &c) {
        emit_rounds(c, h, params, [&](unsigned i) {
            const Gate and_gate =
                Gate::mcx({chi_control(h[(i + 1) % m], params), {h[(i + 2) % m]}}, s[i]);
            c.append(and_gate);
            c.append(Gate::cnot(s[i], h[i]));
            c.append(and_gate); // uncompute: operands unchanged since the first AND
        });
    });
}

} // namespace qmine
