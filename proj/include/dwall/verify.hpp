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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dwall/io.hpp"

namespace dwall {

/// Deliberate defects injected into verify_all so that the suite itself can
/// be tested.
enum class Mutation {
    None,
    /// One-hot core field -(m-1) lambda instead of -(m-2) lambda.
    OneHotCoreCoefficient,
    /// Domain-wall mixer built as sum (Zbar_{i-1} X_i + X_i Zbar_{i+1}).
    MixerSignFlip,
};

/// Accepts "none", "onehot-core" and "mixer-sign".
Mutation parse_mutation(std::string_view text);

struct PropertyResult {
    std::string module;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<PropertyResult> results;
    bool passed() const;
    /// One "PASS|FAIL module: name [detail]" line per property.
    std::string to_text() const;
};

/// Ground-state set of the encoded model, decoded, equals the classical
/// argmin. On mismatch `detail` says why.
bool optima_agree(const Instance& inst, EncodingKind kind, std::string& detail);

/// Randomised property suite over every module, seeded by `seed`.
VerifyReport verify_all(Mutation mutation = Mutation::None, std::uint64_t seed = 1);

}  // namespace dwall
