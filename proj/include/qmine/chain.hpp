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
 * Toy proof-of-work chain: header layout, brute-force miner, difficulty
 * derivation, validation, and the JSON chain file ("qmine-chain/1").
 */
#pragma once

#include "qmine/bitstring.hpp"
#include "qmine/miner.hpp"
#include "qmine/toyhash.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qmine {

struct BlockHeader {
    BitString prev_digest;
    BitString payload_digest;
    std::uint64_t timestamp = 0;
    unsigned difficulty_zeros = 0;
    std::uint64_t nonce = 0;

    friend bool operator==(const BlockHeader &, const BlockHeader &) = default;
};

struct Block {
    BlockHeader header;
    Digest digest;

    friend bool operator==(const Block &, const Block &) = default;
};

struct ChainParams {
    HashParams hash;
    unsigned nonce_bits = 4;

    void validate() const;
    friend bool operator==(const ChainParams &, const ChainParams &) = default;
};

/// [prev_digest, payload_digest, timestamp mod 2^m, z] as m-bit blocks.
/// The nonce is absorbed separately as the final block.
std::vector<BitString> serialize_header(const BlockHeader &header, const HashParams &params);

/// Digest of the header with its nonce appended as the last block.
Digest header_digest(const BlockHeader &header, const HashParams &params);

/// Scans nonce = 0, 1, ... and returns the first whose digest has z leading
/// zero bits; hashes_tried counts evaluations (2^n when none passes).
MiningResult mine_classical(std::span<const BitString> header_blocks, unsigned nonce_bits,
                            const MiningParams &params);

/// Every nonce in [0, 2^n) that passes the z-leading-zeros test, ascending.
std::vector<std::uint64_t> solution_set(std::span<const BitString> header_blocks,
                                        unsigned nonce_bits, unsigned zeros,
                                        const HashParams &params);

/// Solves 2^x / 2^(m-n) = 1/2 for x and returns z = m - x, the leading-zero
/// count that leaves one half expected solution per nonce space.
/// Throws ArgumentError unless n < m.
unsigned compute_required_zeros(unsigned nonce_bits, unsigned hash_bits);

struct ValidationReport {
    bool valid = true;
    /// Reason codes, e.g. "digest-mismatch", "difficulty", "prev-link".
    std::vector<std::string> reasons;

    void fail(std::string reason);
};

ValidationReport validate_block(const Block &block, const ChainParams &params);
ValidationReport validate_chain(std::span<const Block> blocks, const ChainParams &params);

/// Builds a block from a header and a mined nonce, caching its digest.
Block seal_block(BlockHeader header, const HashParams &params);

struct Chain {
    static constexpr const char *format_version = "qmine-chain/1";

    ChainParams params;
    std::vector<Block> blocks;

    /// Digest the next block must link to (0^m for an empty chain).
    [[nodiscard]] BitString tip_digest() const;

    [[nodiscard]] std::string to_json() const;
    /// Throws ArgumentError on malformed input or a version mismatch.
    static Chain from_json(const std::string &text);

    void save(const std::filesystem::path &path) const;
    static Chain load(const std::filesystem::path &path);
};

/// Searches timestamps start, start+1, ... (up to `attempts`) for a header
/// whose solution set at its difficulty has exactly `solutions` members.
std::optional<BlockHeader> find_header_with_solutions(BlockHeader base, std::uint64_t solutions,
                                                      const ChainParams &params,
                                                      std::uint64_t attempts = 1U << 16);

} // namespace qmine
