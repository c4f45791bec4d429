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
#include "qmine/gate.hpp"

#include "qmine/errors.hpp"

#include <algorithm>
#include <sstream>

namespace qmine {

Gate Gate::h(Qubit q) { return {GateKind::h, {q}, {}}; }

Gate Gate::x(Qubit q) { return {GateKind::x, {q}, {}}; }

Gate Gate::swap(Qubit a, Qubit b) { return {GateKind::swap, {a, b}, {}}; }

Gate Gate::mcx(std::vector<Control> controls, Qubit target) {
    if (controls.empty()) {
        throw ArgumentError("MCX needs at least one control");
    }
    return {GateKind::mcx, {target}, std::move(controls)};
}

Gate Gate::cnot(Qubit control, Qubit target) { return mcx({{control}}, target); }

Gate Gate::ccnot(Qubit c0, Qubit c1, Qubit target) { return mcx({{c0}, {c1}}, target); }

Qubit Gate::max_qubit() const noexcept {
    Qubit top = 0;
    for (Qubit q : targets_) {
        top = std::max(top, q);
    }
    for (const Control &c : controls_) {
        top = std::max(top, c.qubit);
    }
    return top;
}

std::vector<Qubit> Gate::qubits() const {
    std::vector<Qubit> all = targets_;
    for (const Control &c : controls_) {
        all.push_back(c.qubit);
    }
    return all;
}

bool Gate::qubits_distinct() const {
    std::vector<Qubit> all = qubits();
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) == all.end();
}

std::string to_string(GateKind kind) {
    switch (kind) {
    case GateKind::h:
        return "H";
    case GateKind::x:
        return "X";
    case GateKind::swap:
        return "SWAP";
    case GateKind::mcx:
        return "MCX";
    }
    return "?";
}

std::string Gate::to_string() const {
    std::string out = qmine::to_string(kind_);
    for (Qubit q : targets_) {
        out += ' ';
        out += std::to_string(q);
    }
    if (!controls_.empty()) {
        out += " [";
        for (std::size_t i = 0; i < controls_.size(); ++i) {
            if (i != 0) {
                out += ' ';
            }
            out += controls_[i].polarity == Polarity::positive ? '+' : '-';
            out += std::to_string(controls_[i].qubit);
        }
        out += ']';
    }
    return out;
}

Gate Gate::parse(const std::string &line) {
    std::istringstream in(line);
    std::string kind;
    in >> kind;
    auto read_qubit = [&]() {
        long long q = -1;
        if (!(in >> q) || q < 0) {
            throw ArgumentError("malformed gate line: '" + line + "'");
        }
        return static_cast<Qubit>(q);
    };
    if (kind == "H") {
        return h(read_qubit());
    }
    if (kind == "X") {
        return x(read_qubit());
    }
    if (kind == "SWAP") {
        const Qubit a = read_qubit();
        return swap(a, read_qubit());
    }
    if (kind == "MCX") {
        const Qubit target = read_qubit();
        std::string rest;
        std::getline(in, rest);
        const auto open = rest.find('[');
        const auto close = rest.find(']');
        if (open == std::string::npos || close == std::string::npos || close < open) {
            throw ArgumentError("malformed gate line: '" + line + "'");
        }
        std::istringstream ctl(rest.substr(open + 1, close - open - 1));
        std::vector<Control> controls;
        std::string token;
        while (ctl >> token) {
            if (token.size() < 2 || (token[0] != '+' && token[0] != '-')) {
                throw ArgumentError("malformed control '" + token + "'");
            }
            controls.push_back({static_cast<Qubit>(std::stoul(token.substr(1))),
                                token[0] == '+' ? Polarity::positive : Polarity::negative});
        }
        return mcx(std::move(controls), target);
    }
    throw ArgumentError("unknown gate kind in line: '" + line + "'");
}

GateStats &GateStats::operator+=(const GateStats &other) noexcept {
    total += other.total;
    for (std::size_t i = 0; i < by_kind.size(); ++i) {
        by_kind[i] += other.by_kind[i];
    }
    return *this;
}

} // namespace qmine
