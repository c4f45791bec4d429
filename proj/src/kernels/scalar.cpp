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
#include "kernels_impl.hpp"

#include <cmath>
#include <utility>

namespace qmine::kernels::detail {

namespace {
constexpr double inv_sqrt2 = 0.70710678118654752440;
}

void hadamard_scalar(std::span<Amplitude> amps, unsigned target) {
    const BasisIndex dim = amps.size();
    const BasisIndex stride = BasisIndex{1} << target;
    for (BasisIndex base = 0; base < dim; base += 2 * stride) {
        for (BasisIndex j = base; j < base + stride; ++j) {
            const Amplitude v0 = amps[j];
            const Amplitude v1 = amps[j + stride];
            amps[j] = {(v0.real() + v1.real()) * inv_sqrt2,
                       (v0.imag() + v1.imag()) * inv_sqrt2};
            amps[j + stride] = {(v0.real() - v1.real()) * inv_sqrt2,
                                (v0.imag() - v1.imag()) * inv_sqrt2};
        }
    }
}

void pauli_x_scalar(std::span<Amplitude> amps, unsigned target) {
    const BasisIndex dim = amps.size();
    const BasisIndex stride = BasisIndex{1} << target;
    for (BasisIndex base = 0; base < dim; base += 2 * stride) {
        for (BasisIndex j = base; j < base + stride; ++j) {
            std::swap(amps[j], amps[j + stride]);
        }
    }
}

void swap_scalar(std::span<Amplitude> amps, unsigned a, unsigned b) {
    const BasisIndex bit_a = BasisIndex{1} << a;
    const BasisIndex bit_b = BasisIndex{1} << b;
    // |..1_a..0_b..> <-> |..0_a..1_b..>
    for_each_free(amps.size(), bit_a | bit_b, bit_a, [&](BasisIndex i) {
        std::swap(amps[i], amps[i ^ (bit_a | bit_b)]);
    });
}

void controlled_x_scalar(std::span<Amplitude> amps, BasisIndex mask,
                         BasisIndex value, unsigned target) {
    const BasisIndex bit_t = BasisIndex{1} << target;
    for_each_free(amps.size(), mask | bit_t, value, [&](BasisIndex i) {
        std::swap(amps[i], amps[i | bit_t]);
    });
}

double masked_probability_scalar(std::span<const Amplitude> amps,
                                 BasisIndex mask, BasisIndex value) {
    double total = 0.0;
    for_each_free(amps.size(), mask, value, [&](BasisIndex i) {
        total += std::norm(amps[i]);
    });
    return total;
}

} // namespace qmine::kernels::detail
