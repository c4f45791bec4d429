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
#include "qmine/layout.hpp"

#include "qmine/errors.hpp"

#include <string>

namespace qmine {

RegisterLayout RegisterLayout::make(unsigned nonce_bits, unsigned hash_bits,
                                    unsigned service_bits) {
    if (nonce_bits == 0 || hash_bits == 0) {
        throw ArgumentError("layout needs at least one nonce and one hash qubit");
    }
    RegisterLayout layout;
    Qubit next = 0;
    for (unsigned i = 0; i < nonce_bits; ++i) {
        layout.nonce.push_back(next++);
    }
    for (unsigned i = 0; i < hash_bits; ++i) {
        layout.hash.push_back(next++);
    }
    for (unsigned i = 0; i < service_bits; ++i) {
        layout.service.push_back(next++);
    }
    layout.functional = next;
    return layout;
}

void RegisterLayout::validate() const {
    if (nonce.empty() || hash.empty()) {
        throw ArgumentError("layout needs at least one nonce and one hash qubit");
    }
    Qubit expect = 0;
    auto check = [&](const std::vector<Qubit> &reg, const char *name) {
        for (Qubit q : reg) {
            if (q != expect) {
                throw ArgumentError(std::string("layout register '") + name +
                                    "' breaks the nonce/hash/service/functional ordering at qubit " +
                                    std::to_string(q));
            }
            ++expect;
        }
    };
    check(nonce, "nonce");
    check(hash, "hash");
    check(service, "service");
    if (functional != expect) {
        throw ArgumentError("functional qubit must follow the service register");
    }
}

} // namespace qmine
