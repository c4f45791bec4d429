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
 * Amplitude kernels for the dense state vector.
 *
 * Every kernel has a scalar reference implementation and, where the target
 * supports it, an AVX2 variant. The active table is chosen once at startup
 * from CPU feature detection; `QMINE_KERNELS=scalar|avx2` overrides it.
 *
 * Basis index b encodes qubit k as bit k of b.
 */
#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string_view>

namespace qmine {

using Amplitude = std::complex<double>;
using BasisIndex = std::uint64_t;

namespace kernels {

enum class Backend { scalar, avx2 };

struct KernelTable {
    Backend backend;
    std::string_view name;

    void (*hadamard)(std::span<Amplitude> amps, unsigned target);
    void (*pauli_x)(std::span<Amplitude> amps, unsigned target);
    void (*swap)(std::span<Amplitude> amps, unsigned a, unsigned b);
    /// Flips `target` on every basis index with (index & mask) == value.
    /// `mask` must not contain the target bit.
    void (*controlled_x)(std::span<Amplitude> amps, BasisIndex mask,
                         BasisIndex value, unsigned target);
    /// Sum of |a_i|^2 over basis indices with (index & mask) == value.
    double (*masked_probability)(std::span<const Amplitude> amps,
                                 BasisIndex mask, BasisIndex value);
};

const KernelTable &scalar_table();

/// True when the variant was compiled in and the running CPU supports it.
bool available(Backend backend);

/// Throws ArgumentError if the backend is not available.
const KernelTable &table(Backend backend);

/// Best available table, honouring the QMINE_KERNELS override.
const KernelTable &active();

std::string_view to_string(Backend backend);

} // namespace kernels
} // namespace qmine
