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

#include "qmine/kernels.hpp"

#include <bit>

namespace qmine::kernels::detail {

/// Calls fn(base | free) for every assignment of the bits outside `fixed`
/// within a `dim`-sized index space, in ascending order.
template <class Fn>
inline void for_each_free(BasisIndex dim, BasisIndex fixed, BasisIndex base,
                          Fn &&fn) {
    const BasisIndex free = (dim - 1) & ~fixed;
    BasisIndex i = 0;
    do {
        fn(base | i);
        i = ((i | fixed) + 1) & free;
    } while (i != 0);
}

void hadamard_scalar(std::span<Amplitude> amps, unsigned target);
void pauli_x_scalar(std::span<Amplitude> amps, unsigned target);
void swap_scalar(std::span<Amplitude> amps, unsigned a, unsigned b);
void controlled_x_scalar(std::span<Amplitude> amps, BasisIndex mask,
                         BasisIndex value, unsigned target);
double masked_probability_scalar(std::span<const Amplitude> amps,
                                 BasisIndex mask, BasisIndex value);

#ifdef QMINE_HAVE_AVX2
const KernelTable &avx2_table();
#endif

} // namespace qmine::kernels::detail
