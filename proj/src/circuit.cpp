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
#include "qmine/circuit.hpp"

#include "qmine/errors.hpp"

#include <numeric>
#include <sstream>

namespace qmine {

Circuit::Circuit(unsigned num_qubits, std::string label)
    : num_qubits_(num_qubits), label_(std::move(label)) {}

void Circuit::append(Gate gate) {
    if (gate.max_qubit() >= num_qubits_) {
        throw IndexError("gate '" + gate.to_string() + "' exceeds " +
                         std::to_string(num_qubits_) + "-qubit circuit");
    }
    if (!gate.qubits_distinct()) {
        throw IndexError("gate '" + gate.to_string() + "' repeats a qubit");
    }
    gates_.push_back(std::move(gate));
}

void Circuit::append(const Circuit &other) {
    if (other.num_qubits_ > num_qubits_) {
        throw ArgumentError("cannot append a " + std::to_string(other.num_qubits_) +
                            "-qubit circuit to a " + std::to_string(num_qubits_) +
                            "-qubit circuit");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

GateStats Circuit::gate_counts() const {
    GateStats stats;
    for (const Gate &g : gates_) {
        stats.record(g.kind());
    }
    return stats;
}

std::string Circuit::dump() const {
    std::string out = "# " + (label_.empty() ? std::string("circuit") : label_) +
                      " qubits=" + std::to_string(num_qubits_) +
                      " gates=" + std::to_string(gates_.size()) + "\n";
    for (const Gate &g : gates_) {
        out += g.to_string();
        out += '\n';
    }
    return out;
}

Circuit Circuit::parse(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || !line.starts_with("# ")) {
        throw ArgumentError("circuit dump must start with a '# <label> qubits=<n>' line");
    }
    const auto qpos = line.rfind(" qubits=");
    const auto gpos = line.rfind(" gates=");
    if (qpos == std::string::npos || gpos == std::string::npos || gpos < qpos) {
        throw ArgumentError("malformed circuit header: '" + line + "'");
    }
    const unsigned n = static_cast<unsigned>(std::stoul(line.substr(qpos + 8, gpos - qpos - 8)));
    Circuit c(n, line.substr(2, qpos - 2));
    while (std::getline(in, line)) {
        if (!line.empty()) {
            c.append(Gate::parse(line));
        }
    }
    return c;
}

Circuit invert(const Circuit &circuit) {
    Circuit out(circuit.num_qubits(),
                circuit.label().empty() ? std::string{} : circuit.label() + "^-1");
    for (auto it = circuit.gates().rbegin(); it != circuit.gates().rend(); ++it) {
        out.append(*it);
    }
    return out;
}

namespace {

void require_distinct(Qubit a, Qubit b, Qubit target, const char *what) {
    if (a == b || a == target || b == target) {
        throw ArgumentError(std::string(what) + ": operand and target qubits must be distinct");
    }
}

} // namespace

void emit_xor_into(Circuit &circuit, Qubit a, Qubit b, Qubit target) {
    require_distinct(a, b, target, "xor-into");
    circuit.append(Gate::cnot(a, target));
    circuit.append(Gate::cnot(b, target));
}

void emit_and_into(Circuit &circuit, Qubit a, Qubit b, Qubit target) {
    require_distinct(a, b, target, "and-into");
    circuit.append(Gate::ccnot(a, b, target));
}

void emit_not(Circuit &circuit, Qubit a) { circuit.append(Gate::x(a)); }

void emit_rotate_left(Circuit &circuit, std::span<const Qubit> reg, unsigned k) {
    const std::size_t len = reg.size();
    if (len == 0) {
        throw ArgumentError("rotate: empty register");
    }
    if (k >= len) {
        throw ArgumentError("rotate: shift " + std::to_string(k) + " not below register length " +
                            std::to_string(len));
    }
    if (k == 0) {
        return;
    }
    // Content at position p moves to (p + k) mod len. A cycle
    // s -> s+k -> s+2k -> ... of length L is realised by swapping s with
    // each later member in turn: L - 1 transpositions.
    const std::size_t cycles = std::gcd(len, std::size_t{k});
    const std::size_t cycle_len = len / cycles;
    for (std::size_t start = 0; start < cycles; ++start) {
        for (std::size_t j = 1; j < cycle_len; ++j) {
            circuit.append(Gate::swap(reg[start], reg[(start + j * k) % len]));
        }
    }
}

void apply_circuit(StateVector &state, const Circuit &circuit, GateStats *stats) {
    if (circuit.num_qubits() > state.num_qubits()) {
        throw ArgumentError("circuit '" + circuit.label() + "' needs " +
                            std::to_string(circuit.num_qubits()) + " qubits, state has " +
                            std::to_string(state.num_qubits()));
    }
    for (const Gate &g : circuit.gates()) {
        state.apply(g);
        if (stats != nullptr) {
            stats->record(g.kind());
        }
    }
}

} // namespace qmine
