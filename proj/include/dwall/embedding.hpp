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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dwall/hardware.hpp"

namespace dwall {

/// chains[u] is the sorted set of target vertices representing source vertex u.
struct Embedding {
    std::vector<std::vector<int>> chains;

    std::size_t total_size() const;
    bool operator==(const Embedding&) const = default;
};

struct EmbedParams {
    int max_tries = 10;
    std::uint64_t seed = 0;
    /// Cap on overlap-repair passes per try.
    int rounds = 64;
    /// A try is abandoned after this many passes without progress.
    int max_no_improvement = 10;
    /// Chain-shortening passes without progress before a valid embedding is
    /// returned.
    int tighten_rounds = 2;
};

/// Randomised chain growth with overfill-then-repair refinement: chains are
/// first allowed to share qubits, then rebuilt one at a time under overlap
/// penalties until they are disjoint. Tries run in parallel in batches; the
/// lowest-index successful try is returned, so the result only depends on
/// (source, target, params).
std::optional<Embedding> find_embedding(const HardwareGraph& source, const HardwareGraph& target,
                                        const EmbedParams& params = {});

/// A single try, exposed for testing and benchmarking.
std::optional<Embedding> embedding_try(const HardwareGraph& source, const HardwareGraph& target,
                                       const EmbedParams& params, int try_index);

struct EmbeddingCheck {
    bool valid = true;
    std::vector<std::string> violations;
};

/// Checks chain disjointness, chain connectivity and that every source edge
/// is realised by some target edge; reports every violation found.
EmbeddingCheck validate(const Embedding& e, const HardwareGraph& source, const HardwareGraph& target);

/// Physical vertices used per source vertex. Throws if `e` is invalid.
double embedding_ratio(const Embedding& e, const HardwareGraph& source, const HardwareGraph& target);

struct SizeSearchOptions {
    /// First size tried (e.g. the previous problem's answer); clamped to the
    /// family minimum.
    int warm_start = 0;
    int ceiling = 16;
};

struct SizeSearchResult {
    /// Smallest size that succeeded, nullopt if the ceiling was reached.
    std::optional<int> L;
    Embedding embedding;
    HardwareGraph target;
    /// (L, success) for every size attempted, in order.
    std::vector<std::pair<int, bool>> attempts;
};

HardwareGraph make_target(GraphFamily family, int L);
int family_min_size(GraphFamily family);

/// Starts at the warm start, grows L until an embedding is found, then
/// shrinks until one is not.
SizeSearchResult min_embeddable_size(const HardwareGraph& source, GraphFamily family, const EmbedParams& params = {},
                                     const SizeSearchOptions& options = {});

}  // namespace dwall
