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

#include "qmine/errors.hpp"

#include <cstdlib>
#include <string>

namespace qmine::kernels {

const KernelTable &scalar_table() {
    static const KernelTable table{
        Backend::scalar,
        "scalar",
        detail::hadamard_scalar,
        detail::pauli_x_scalar,
        detail::swap_scalar,
        detail::controlled_x_scalar,
        detail::masked_probability_scalar,
    };
    return table;
}

bool available(Backend backend) {
    switch (backend) {
    case Backend::scalar:
        return true;
    case Backend::avx2:
#if defined(QMINE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
        __builtin_cpu_init();
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
        return false;
#endif
    }
    return false;
}

const KernelTable &table(Backend backend) {
    if (!available(backend)) {
        throw ArgumentError("kernel backend '" + std::string(to_string(backend)) +
                            "' is not available on this machine");
    }
#ifdef QMINE_HAVE_AVX2
    if (backend == Backend::avx2) {
        return detail::avx2_table();
    }
#endif
    return scalar_table();
}

namespace {

const KernelTable &select_active() {
    if (const char *env = std::getenv("QMINE_KERNELS")) {
        const std::string_view want{env};
        if (want == "scalar") {
            return scalar_table();
        }
        if (want == "avx2" && available(Backend::avx2)) {
            return table(Backend::avx2);
        }
    }
    if (available(Backend::avx2)) {
        return table(Backend::avx2);
    }
    return scalar_table();
}

} // namespace

const KernelTable &active() {
    static const KernelTable &chosen = select_active();
    return chosen;
}

std::string_view to_string(Backend backend) {
    switch (backend) {
    case Backend::scalar:
        return "scalar";
    case Backend::avx2:
        return "avx2";
    }
    return "unknown";
}

} // namespace qmine::kernels
