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

#include <stdexcept>
#include <string>

namespace qmine {

/// Requested qubit count exceeds the simulator cap.
class CapacityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Qubit index out of range or repeated within one gate.
class IndexError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

class ArgumentError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Register layout cannot host the requested construction.
class UnsupportedLayoutError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

} // namespace qmine
