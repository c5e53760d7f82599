// Copyright 2026 The dwall Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace dwall {

/// Spin vector length does not match the model.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Problem too large for an exhaustive or dense routine.
struct SizeError : std::length_error {
    using std::length_error::length_error;
};

/// Qubit mapping is not injective or out of range.
struct MappingError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of the operation (m < 2, bad value index, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// The same variable was passed where two distinct variables are required.
struct AliasingError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The requested construction has no valid configuration (e.g. k > m).
struct InfeasibleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed input file or record.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dwall
