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
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "dwall/encoding.hpp"

namespace dwall {

using Edge = std::pair<int, int>;

/// Undirected graph to be coloured with `n_colors` colours. Edges are stored
/// with i < j, sorted, without duplicates.
struct ColoringInstance {
    int n_vertices = 0;
    std::vector<Edge> edges;
    int n_colors = 2;
};

struct Event {
    int t_min = 0;
    int t_max = 0;
    int duration = 1;

    /// Number of additional start slots; the event takes dur() + 1 values.
    int dur() const { return t_max - t_min; }
};

struct SchedulingInstance {
    std::vector<Event> events;
    /// Conflicting event pairs, i < j, sorted.
    std::vector<Edge> conflicts;
};

/// Dense pairwise energy tables between discrete variables.
struct UnstructuredInstance {
    std::vector<int> sizes;
    struct Pair {
        int k = 0;
        int l = 0;
        ValueMatrix a;
    };
    std::vector<Pair> pairs;
};

/// Erdos-Renyi G(n, p): pairs (i, j), i < j, in lexicographic order; each is
/// an edge iff the next SplitMix64 uniform is below p.
std::vector<Edge> gen_erdos_renyi(int n_vertices, double p, std::uint64_t seed);

/// Random scheduling instance with 2 * n_events time units, conflict
/// probability 0.75 and durations in [1, 5].
SchedulingInstance gen_scheduling(int n_events, std::uint64_t seed);

/// Every pair of variables gets a dense table with entries uniform in [lo, hi).
UnstructuredInstance gen_unstructured(std::span<const int> sizes, double lo, double hi, std::uint64_t seed);

/// Start times s_a, s_b with durations t_a, t_b collide.
bool intervals_overlap(int start_a, int duration_a, int start_b, int duration_b);

/// R[l][q] = 1 iff event i starting at t_min_i + l overlaps event j starting at t_min_j + q.
ValueMatrix overlap_matrix(const Event& a, const Event& b);

/// Per-variable core strength. nullopt selects the recommendation (1 + total
/// interaction weight seen by that variable).
using Lambda = std::optional<double>;

EncodedProblem build_unstructured(const UnstructuredInstance& inst, EncodingKind kind, Lambda lambda = std::nullopt);
EncodedProblem build_coloring(const ColoringInstance& inst, EncodingKind kind, Lambda lambda = std::nullopt,
                              double weight = 1.0);
/// One Z_{dur+1} variable per event with dur >= 1, in event order. Events with
/// dur == 0 are fixed and fold into value penalties on their partners.
EncodedProblem build_scheduling(const SchedulingInstance& inst, EncodingKind kind, Lambda lambda = std::nullopt,
                                double weight = 1.0);

/// Logical assignment for a scheduling problem (start offsets per event,
/// fixed events report 0), or nullopt if the spins are not valid.
std::optional<std::vector<int>> decode_schedule(const SchedulingInstance& inst, const EncodedProblem& p,
                                                std::span<const std::int8_t> s);

/// Logical objectives evaluated directly on assignments.
double coloring_objective(const ColoringInstance& inst, std::span<const int> colors);
double scheduling_objective(const SchedulingInstance& inst, std::span<const int> offsets);
double unstructured_objective(const UnstructuredInstance& inst, std::span<const int> values);

struct ClassicalOptimum {
    double value = 0.0;
    /// Every minimizing assignment, in mixed-radix (first variable fastest) order.
    std::vector<std::vector<int>> argmin;
};

ClassicalOptimum classical_optimum(const ColoringInstance& inst, std::uint64_t max_space = 10'000'000);
ClassicalOptimum classical_optimum(const SchedulingInstance& inst, std::uint64_t max_space = 10'000'000);
ClassicalOptimum classical_optimum(const UnstructuredInstance& inst, std::uint64_t max_space = 10'000'000);

/// Edge-to-vertex ratio where one-hot and domain-wall colouring need the same
/// number of interactions.
double critical_ratio(int n_colors);

}  // namespace dwall
