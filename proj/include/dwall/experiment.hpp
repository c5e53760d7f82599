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
#include <string_view>
#include <vector>

#include "dwall/embedding.hpp"
#include "dwall/encoding.hpp"
#include "dwall/io.hpp"

namespace dwall {

/// Random problem families of the embedding experiments.
///  - ThreeColor: size n gives G(n, 0.5) with 3 colours.
///  - NColor: size n gives G(2n, 0.75) with n colours.
///  - Scheduling: size n gives gen_scheduling(n).
enum class ProblemFamily { ThreeColor, NColor, Scheduling };

std::string_view to_string(ProblemFamily family);
/// Accepts "three-color", "n-color" and "scheduling".
ProblemFamily parse_problem_family(std::string_view text);

Instance generate_instance(ProblemFamily family, int size, std::uint64_t seed);

struct ExperimentSpec {
    ProblemFamily family = ProblemFamily::Scheduling;
    std::vector<int> sizes;
    int instances = 10;
    std::vector<EncodingKind> encodings{EncodingKind::DomainWall, EncodingKind::OneHot};
    std::vector<GraphFamily> targets{GraphFamily::Chimera, GraphFamily::Pegasus};
    std::uint64_t master_seed = 0;
    int tries = 10;
    /// Largest hardware size attempted before a row is reported as failed.
    int ceiling = 16;

    /// Throws DomainError on empty lists, non-positive counts, sizes too small
    /// for the family or the Arbitrary target.
    void validate() const;
};

std::uint64_t instance_seed(std::uint64_t master_seed, int size, int instance_index);

struct ResultRow {
    std::string problem_type;
    int size_param = 0;
    int instance_index = 0;
    std::uint64_t instance_seed = 0;
    EncodingKind encoding = EncodingKind::DomainWall;
    GraphFamily target_family = GraphFamily::Chimera;
    std::optional<int> min_L;
    int logical_qubits = 0;
    std::optional<int> physical_qubits;
    std::optional<double> embedding_ratio;
    int couplers = 0;
    int tries = 0;
    /// "ok", "ceiling" (no embedding up to the ceiling) or "error: <message>".
    std::string status;

    bool operator==(const ResultRow&) const = default;
};

inline constexpr std::string_view kResultHeader =
    "problem_type,size_param,instance_index,instance_seed,encoding,target_family,min_L,logical_qubits,"
    "physical_qubits,embedding_ratio,couplers,tries,status";

/// One row per (size, instance, encoding, target), in that lexicographic
/// order. Rows run in parallel; within one (instance, encoding, target) the
/// sizes run in increasing order, each warm-started from the previous answer.
/// The result depends only on the spec.
std::vector<ResultRow> run_experiment(const ExperimentSpec& spec);

/// Header line plus one line per row.
std::string to_csv(const std::vector<ResultRow>& rows);
/// Inverse of to_csv. Throws ParseError naming the offending line.
std::vector<ResultRow> parse_results(std::string_view csv);

struct Stat {
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
};

struct SummaryRow {
    std::string problem_type;
    int size_param = 0;
    EncodingKind encoding = EncodingKind::DomainWall;
    GraphFamily target_family = GraphFamily::Chimera;
    int ok = 0;
    int failed = 0;
    /// Over rows with status ok; absent when there are none.
    std::optional<Stat> min_L;
    std::optional<Stat> embedding_ratio;
};

/// Groups by (problem_type, size, encoding, target), sorted by that key.
/// Independent of the input row order.
std::vector<SummaryRow> summarize(const std::vector<ResultRow>& rows);
std::string summary_csv(const std::vector<SummaryRow>& rows);

}  // namespace dwall
