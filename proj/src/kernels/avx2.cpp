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
// AVX2 amplitude kernels. Only reachable through the dispatch table after
// a runtime CPU check, so every function carries its own target attribute
// instead of compiling the translation unit with -mavx2.
#include "kernels_impl.hpp"

#ifdef QMINE_HAVE_AVX2

#include <immintrin.h>

#define QMINE_AVX2 __attribute__((target("avx2,fma")))

namespace qmine::kernels::detail {

namespace {

constexpr double inv_sqrt2 = 0.70710678118654752440;

// One __m256d holds two consecutive amplitudes: [re0, im0, re1, im1].
QMINE_AVX2 inline __m256d load2(const Amplitude *p) {
    return _mm256_loadu_pd(reinterpret_cast<const double *>(p));
}

QMINE_AVX2 inline void store2(Amplitude *p, __m256d v) {
    _mm256_storeu_pd(reinterpret_cast<double *>(p), v);
}

QMINE_AVX2 inline __m256d swap_halves(__m256d v) {
    return _mm256_permute2f128_pd(v, v, 1);
}

QMINE_AVX2 void hadamard_avx2(std::span<Amplitude> amps, unsigned target) {
    Amplitude *p = amps.data();
    const BasisIndex dim = amps.size();
    const __m256d scale = _mm256_set1_pd(inv_sqrt2);
    if (target == 0) {
        for (BasisIndex i = 0; i < dim; i += 2) {
            const __m256d v = load2(p + i);
            const __m256d sw = swap_halves(v);
            const __m256d sum = _mm256_add_pd(v, sw);
            const __m256d diff = _mm256_sub_pd(sw, v);
            store2(p + i, _mm256_mul_pd(_mm256_blend_pd(sum, diff, 0b1100), scale));
        }
        return;
    }
    const BasisIndex stride = BasisIndex{1} << target;
    for (BasisIndex base = 0; base < dim; base += 2 * stride) {
        for (BasisIndex j = base; j < base + stride; j += 2) {
            const __m256d v0 = load2(p + j);
            const __m256d v1 = load2(p + j + stride);
            store2(p + j, _mm256_mul_pd(_mm256_add_pd(v0, v1), scale));
            store2(p + j + stride, _mm256_mul_pd(_mm256_sub_pd(v0, v1), scale));
        }
    }
}

QMINE_AVX2 void pauli_x_avx2(std::span<Amplitude> amps, unsigned target) {
    Amplitude *p = amps.data();
    const BasisIndex dim = amps.size();
    if (target == 0) {
        for (BasisIndex i = 0; i < dim; i += 2) {
            store2(p + i, swap_halves(load2(p + i)));
        }
        return;
    }
    const BasisIndex stride = BasisIndex{1} << target;
    for (BasisIndex base = 0; base < dim; base += 2 * stride) {
        for (BasisIndex j = base; j < base + stride; j += 2) {
            const __m256d v0 = load2(p + j);
            const __m256d v1 = load2(p + j + stride);
            store2(p + j, v1);
            store2(p + j + stride, v0);
        }
    }
}

// Pairwise exchange of index i with i ^ flip over every i = base | free,
// where bit 0 is free so amplitudes i and i+1 move together.
QMINE_AVX2 void exchange_pairs(Amplitude *p, BasisIndex dim, BasisIndex fixed,
                               BasisIndex base, BasisIndex flip) {
    const BasisIndex free = (dim - 1) & ~(fixed | 1);
    BasisIndex i = 0;
    do {
        const BasisIndex lo = base | i;
        const BasisIndex hi = lo ^ flip;
        const __m256d v0 = load2(p + lo);
        const __m256d v1 = load2(p + hi);
        store2(p + lo, v1);
        store2(p + hi, v0);
        i = ((i | fixed | 1) + 1) & free;
    } while (i != 0);
}

QMINE_AVX2 void swap_avx2(std::span<Amplitude> amps, unsigned a, unsigned b) {
    if (a == 0 || b == 0) {
        swap_scalar(amps, a, b);
        return;
    }
    const BasisIndex bit_a = BasisIndex{1} << a;
    const BasisIndex bit_b = BasisIndex{1} << b;
    exchange_pairs(amps.data(), amps.size(), bit_a | bit_b, bit_a, bit_a | bit_b);
}

QMINE_AVX2 void controlled_x_avx2(std::span<Amplitude> amps, BasisIndex mask,
                                  BasisIndex value, unsigned target) {
    if (target == 0 || (mask & 1) != 0) {
        controlled_x_scalar(amps, mask, value, target);
        return;
    }
    const BasisIndex bit_t = BasisIndex{1} << target;
    exchange_pairs(amps.data(), amps.size(), mask | bit_t, value, bit_t);
}

QMINE_AVX2 double masked_probability_avx2(std::span<const Amplitude> amps,
                                          BasisIndex mask, BasisIndex value) {
    if ((mask & 1) != 0) {
        return masked_probability_scalar(amps, mask, value);
    }
    const Amplitude *p = amps.data();
    const BasisIndex free = (amps.size() - 1) & ~(mask | 1);
    __m256d acc = _mm256_setzero_pd();
    BasisIndex i = 0;
    do {
        const __m256d v = load2(p + (value | i));
        acc = _mm256_fmadd_pd(v, v, acc);
        i = ((i | mask | 1) + 1) & free;
    } while (i != 0);
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

} // namespace

const KernelTable &avx2_table() {
    static const KernelTable table{
        Backend::avx2,    "avx2",
        hadamard_avx2,    pauli_x_avx2,
        swap_avx2,        controlled_x_avx2,
        masked_probability_avx2,
    };
    return table;
}

} // namespace qmine::kernels::detail

#endif // QMINE_HAVE_AVX2
