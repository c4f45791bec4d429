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
#include "qmine/statevector.hpp"

#include "qmine/errors.hpp"

#include <algorithm>

namespace qmine {

BitAssignment assign_register(std::span<const Qubit> reg, std::uint64_t value) {
    BitAssignment out;
    out.reserve(reg.size());
    for (std::size_t i = 0; i < reg.size(); ++i) {
        out.push_back({reg[i], ((value >> i) & 1U) != 0});
    }
    return out;
}

std::uint64_t MeasurementOutcome::value() const {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) {
            v |= std::uint64_t{1} << i;
        }
    }
    return v;
}

std::string MeasurementOutcome::to_string() const {
    std::string out;
    for (std::size_t i = bits.size(); i-- > 0;) {
        out.push_back(bits[i] ? '1' : '0');
    }
    return out;
}

StateVector::StateVector(unsigned num_qubits, unsigned qubit_cap)
    : num_qubits_(num_qubits), kernels_(&kernels::active()) {
    const unsigned cap = std::min(qubit_cap, hard_qubit_cap);
    if (num_qubits < 1 || num_qubits > cap) {
        throw CapacityError("qubit count " + std::to_string(num_qubits) +
                            " outside [1, " + std::to_string(cap) + "] (qubit cap " +
                            std::to_string(cap) + ")");
    }
    amps_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector new_zero_state(unsigned num_qubits, unsigned qubit_cap) {
    return StateVector(num_qubits, qubit_cap);
}

void StateVector::check_qubit(Qubit q) const {
    if (q >= num_qubits_) {
        throw IndexError("qubit " + std::to_string(q) + " out of range for " +
                         std::to_string(num_qubits_) + "-qubit state");
    }
}

void StateVector::apply(const Gate &gate) {
    for (Qubit q : gate.qubits()) {
        check_qubit(q);
    }
    if (!gate.qubits_distinct()) {
        throw IndexError("gate '" + gate.to_string() + "' repeats a qubit");
    }
    const std::span<Amplitude> amps{amps_};
    switch (gate.kind()) {
    case GateKind::h:
        kernels_->hadamard(amps, gate.targets()[0]);
        break;
    case GateKind::x:
        kernels_->pauli_x(amps, gate.targets()[0]);
        break;
    case GateKind::swap:
        kernels_->swap(amps, gate.targets()[0], gate.targets()[1]);
        break;
    case GateKind::mcx: {
        BasisIndex mask = 0;
        BasisIndex value = 0;
        for (const Control &c : gate.controls()) {
            mask |= BasisIndex{1} << c.qubit;
            if (c.polarity == Polarity::positive) {
                value |= BasisIndex{1} << c.qubit;
            }
        }
        kernels_->controlled_x(amps, mask, value, gate.targets()[0]);
        break;
    }
    }
}

double StateVector::probability_of(const BitAssignment &assignment) const {
    BasisIndex mask = 0;
    BasisIndex value = 0;
    for (const QubitValue &qv : assignment) {
        check_qubit(qv.qubit);
        const BasisIndex bit = BasisIndex{1} << qv.qubit;
        if ((mask & bit) != 0 && ((value & bit) != 0) != qv.value) {
            return 0.0; // contradictory assignment
        }
        mask |= bit;
        if (qv.value) {
            value |= bit;
        }
    }
    return kernels_->masked_probability(amps_, mask, value);
}

double StateVector::norm_squared() const { return kernels_->masked_probability(amps_, 0, 0); }

std::vector<double> StateVector::register_distribution(std::span<const Qubit> reg) const {
    for (Qubit q : reg) {
        check_qubit(q);
    }
    if (reg.size() > 32) {
        throw ArgumentError("register too wide for a marginal distribution");
    }
    std::vector<double> dist(std::size_t{1} << reg.size(), 0.0);
    for (BasisIndex b = 0; b < amps_.size(); ++b) {
        const double p = std::norm(amps_[b]);
        if (p == 0.0) {
            continue;
        }
        std::size_t v = 0;
        for (std::size_t i = 0; i < reg.size(); ++i) {
            v |= static_cast<std::size_t>((b >> reg[i]) & 1U) << i;
        }
        dist[v] += p;
    }
    return dist;
}

MeasurementOutcome StateVector::measure_register(std::span<const Qubit> reg,
                                                 std::mt19937_64 &rng) const {
    if (reg.empty()) {
        throw ArgumentError("cannot measure an empty register");
    }
    const std::vector<double> dist = register_distribution(reg);
    double total = 0.0;
    for (double p : dist) {
        total += p;
    }
    // Inverse-CDF sampling on a single uniform draw keeps the rng stream
    // consumption fixed at one value per measurement.
    const double u = std::uniform_real_distribution<double>(0.0, total)(rng);
    std::size_t pick = dist.size() - 1;
    double acc = 0.0;
    for (std::size_t v = 0; v < dist.size(); ++v) {
        acc += dist[v];
        if (u < acc) {
            pick = v;
            break;
        }
    }
    while (dist[pick] == 0.0 && pick > 0) {
        --pick; // u landed on the rounding tail past the last nonzero entry
    }
    MeasurementOutcome out;
    out.bits.resize(reg.size());
    for (std::size_t i = 0; i < reg.size(); ++i) {
        out.bits[i] = ((pick >> i) & 1U) != 0;
    }
    out.probability = dist[pick];
    return out;
}

} // namespace qmine
