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
#include <algorithm>
#include "qmine/chain.hpp"

#include "qmine/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace qmine {

void ChainParams::validate() const {
    hash.validate();
    if (nonce_bits == 0 || nonce_bits > hash.width) {
        throw ArgumentError("nonce width must be in [1, m], got " + std::to_string(nonce_bits));
    }
}

namespace {

void check_width(const BitString &b, unsigned m, const char *field) {
    if (b.width() != m) {
        throw ArgumentError(std::string(field) + " has width " + std::to_string(b.width()) +
                            ", expected " + std::to_string(m));
    }
}

} // namespace

std::vector<BitString> serialize_header(const BlockHeader &header, const HashParams &params) {
    params.validate();
    const unsigned m = params.width;
    check_width(header.prev_digest, m, "prev_digest");
    check_width(header.payload_digest, m, "payload_digest");
    if (header.difficulty_zeros > m) {
        throw ArgumentError("difficulty exceeds hash width");
    }
    return {header.prev_digest, header.payload_digest, BitString::truncate(header.timestamp, m),
            BitString::truncate(header.difficulty_zeros, m)};
}

Digest header_digest(const BlockHeader &header, const HashParams &params) {
    return hash_with_nonce(serialize_header(header, params), header.nonce, params);
}

MiningResult mine_classical(std::span<const BitString> header_blocks, unsigned nonce_bits,
                            const MiningParams &params) {
    params.validate();
    if (nonce_bits == 0 || nonce_bits > params.hash_params.width) {
        throw ArgumentError("nonce width must be in [1, m]");
    }
    MiningResult result;
    const std::uint64_t space = std::uint64_t{1} << nonce_bits;
    for (std::uint64_t v = 0; v < space; ++v) {
        const Digest d = hash_with_nonce(header_blocks, v, params.hash_params);
        ++result.hashes_tried;
        if (d.leading_zeros_at_least(params.difficulty_zeros)) {
            result.nonce = v;
            result.digest = d;
            result.success = true;
            result.success_probability_at_measurement = 1.0;
            return result;
        }
    }
    result.nonce = space - 1;
    result.digest = hash_with_nonce(header_blocks, result.nonce, params.hash_params);
    return result;
}

std::vector<std::uint64_t> solution_set(std::span<const BitString> header_blocks,
                                        unsigned nonce_bits, unsigned zeros,
                                        const HashParams &params) {
    std::vector<std::uint64_t> out;
    const std::uint64_t space = std::uint64_t{1} << nonce_bits;
    for (std::uint64_t v = 0; v < space; ++v) {
        if (hash_with_nonce(header_blocks, v, params).leading_zeros_at_least(zeros)) {
            out.push_back(v);
        }
    }
    return out;
}

unsigned compute_required_zeros(unsigned nonce_bits, unsigned hash_bits) {
    if (nonce_bits >= hash_bits) {
        throw ArgumentError("required zeros need n < m (n=" + std::to_string(nonce_bits) +
                            ", m=" + std::to_string(hash_bits) + ")");
    }
    // 2^x / 2^(m-n) = 2^-1  =>  x = (m - n) - 1 solutions exponent.
    const unsigned solutions_exponent = (hash_bits - nonce_bits) - 1;
    return hash_bits - solutions_exponent;
}

void ValidationReport::fail(std::string reason) {
    valid = false;
    reasons.push_back(std::move(reason));
}

ValidationReport validate_block(const Block &block, const ChainParams &params) {
    ValidationReport report;
    const unsigned m = params.hash.width;
    const BlockHeader &h = block.header;
    if (h.prev_digest.width() != m || h.payload_digest.width() != m ||
        block.digest.width() != m || h.difficulty_zeros > m ||
        h.nonce >= (std::uint64_t{1} << params.nonce_bits)) {
        report.fail("width");
        return report;
    }
    if (header_digest(h, params.hash) != block.digest) {
        report.fail("digest-mismatch");
    }
    if (!block.digest.leading_zeros_at_least(h.difficulty_zeros)) {
        report.fail("difficulty");
    }
    return report;
}

ValidationReport validate_chain(std::span<const Block> blocks, const ChainParams &params) {
    ValidationReport report;
    BitString expected_prev = BitString::zeros(params.hash.width);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const ValidationReport one = validate_block(blocks[i], params);
        for (const std::string &r : one.reasons) {
            report.fail("block " + std::to_string(i) + ": " + r);
        }
        if (blocks[i].header.prev_digest != expected_prev) {
            report.fail("block " + std::to_string(i) + ": " +
                        (i == 0 ? "genesis-link" : "prev-link"));
        }
        expected_prev = blocks[i].digest;
    }
    return report;
}

Block seal_block(BlockHeader header, const HashParams &params) {
    Digest d = header_digest(header, params);
    return {std::move(header), d};
}

BitString Chain::tip_digest() const {
    return blocks.empty() ? BitString::zeros(params.hash.width) : blocks.back().digest;
}

std::string Chain::to_json() const {
    nlohmann::ordered_json j;
    j["version"] = format_version;
    j["params"] = {{"hash_bits", params.hash.width},
                   {"rounds", params.hash.rounds},
                   {"true_chi", params.hash.true_chi},
                   {"nonce_bits", params.nonce_bits}};
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Block &b : blocks) {
        arr.push_back({{"prev_digest", b.header.prev_digest.to_hex()},
                       {"payload_digest", b.header.payload_digest.to_hex()},
                       {"timestamp", b.header.timestamp},
                       {"difficulty_zeros", b.header.difficulty_zeros},
                       {"nonce", b.header.nonce},
                       {"digest", b.digest.to_hex()}});
    }
    j["blocks"] = std::move(arr);
    return j.dump(2) + "\n";
}

Chain Chain::from_json(const std::string &text) {
    Chain chain;
    try {
        const auto j = nlohmann::json::parse(text);
        if (j.at("version").get<std::string>() != format_version) {
            throw ArgumentError("unsupported chain file version '" +
                                j.at("version").get<std::string>() + "'");
        }
        const auto &p = j.at("params");
        chain.params.hash.width = p.at("hash_bits").get<unsigned>();
        chain.params.hash.rounds = p.at("rounds").get<unsigned>();
        chain.params.hash.true_chi = p.value("true_chi", false);
        chain.params.nonce_bits = p.at("nonce_bits").get<unsigned>();
        chain.params.validate();
        const unsigned m = chain.params.hash.width;
        for (const auto &b : j.at("blocks")) {
            Block block;
            block.header.prev_digest = BitString::from_hex(b.at("prev_digest").get<std::string>(), m);
            block.header.payload_digest =
                BitString::from_hex(b.at("payload_digest").get<std::string>(), m);
            block.header.timestamp = b.at("timestamp").get<std::uint64_t>();
            block.header.difficulty_zeros = b.at("difficulty_zeros").get<unsigned>();
            block.header.nonce = b.at("nonce").get<std::uint64_t>();
            block.digest = BitString::from_hex(b.at("digest").get<std::string>(), m);
            chain.blocks.push_back(std::move(block));
        }
    } catch (const nlohmann::json::exception &e) {
        throw ArgumentError(std::string("malformed chain file: ") + e.what());
    }
    return chain;
}

void Chain::save(const std::filesystem::path &path) const {
    std::ofstream out(path);
    if (!out) {
        throw ArgumentError("cannot write chain file " + path.string());
    }
    out << to_json();
}

Chain Chain::load(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ArgumentError("cannot read chain file " + path.string());
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

std::optional<BlockHeader> find_header_with_solutions(BlockHeader base, std::uint64_t solutions,
                                                      const ChainParams &params,
                                                      std::uint64_t attempts) {
    params.validate();
    // The timestamp is absorbed mod 2^m, so only 2^m attempts are distinct.
    attempts = std::min<std::uint64_t>(attempts, std::uint64_t{1} << params.hash.width);
    for (std::uint64_t a = 0; a < attempts; ++a) {
        BlockHeader h = base;
        h.timestamp = base.timestamp + a;
        const auto blocks = serialize_header(h, params.hash);
        if (solution_set(blocks, params.nonce_bits, h.difficulty_zeros, params.hash).size() ==
            solutions) {
            return h;
        }
    }
    return std::nullopt;
}

} // namespace qmine
