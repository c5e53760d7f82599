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

#include "dwall/problems.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "dwall/errors.hpp"
#include "dwall/rng.hpp"

namespace dwall {

std::vector<Edge> gen_erdos_renyi(int n_vertices, double p, std::uint64_t seed) {
    if (n_vertices < 0) throw DomainError("gen_erdos_renyi: negative vertex count");
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("gen_erdos_renyi: p must lie in [0, 1]");
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    for (int i = 0; i < n_vertices; ++i)
        for (int j = i + 1; j < n_vertices; ++j)
            if (rng.uniform() < p) edges.emplace_back(i, j);
    return edges;
}

SchedulingInstance gen_scheduling(int n_events, std::uint64_t seed) {
    if (n_events < 2) throw DomainError("gen_scheduling: need at least two events");
    SplitMix64 rng(seed);
    SchedulingInstance inst;
    const int horizon = 2 * n_events;
    for (int i = 0; i < n_events; ++i)
        for (int j = i + 1; j < n_events; ++j)
            if (rng.uniform() < 0.75) inst.conflicts.emplace_back(i, j);
    inst.events.reserve(static_cast<std::size_t>(n_events));
    for (int k = 0; k < n_events; ++k) {
        Event e;
        e.t_min = static_cast<int>(rng.uniform_int(0, horizon - 2));
        e.t_max = static_cast<int>(rng.uniform_int(e.t_min + 1, horizon));
        e.duration = static_cast<int>(rng.uniform_int(1, 5));
        inst.events.push_back(e);
    }
    return inst;
}

UnstructuredInstance gen_unstructured(std::span<const int> sizes, double lo, double hi, std::uint64_t seed) {
    SplitMix64 rng(seed);
    UnstructuredInstance inst;
    inst.sizes.assign(sizes.begin(), sizes.end());
    for (int m : inst.sizes)
        if (m < 2) throw DomainError("gen_unstructured: sizes must be >= 2");
    const int n = static_cast<int>(inst.sizes.size());
    for (int k = 0; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
            ValueMatrix a(inst.sizes[static_cast<std::size_t>(k)], inst.sizes[static_cast<std::size_t>(l)]);
            for (int i = 0; i < a.rows(); ++i)
                for (int j = 0; j < a.cols(); ++j) a(i, j) = lo + (hi - lo) * rng.uniform();
            inst.pairs.push_back({k, l, std::move(a)});
        }
    }
    return inst;
}

bool intervals_overlap(int start_a, int duration_a, int start_b, int duration_b) {
    return (0 <= start_b - start_a && start_b - start_a < duration_a) ||
           (0 <= start_a - start_b && start_a - start_b < duration_b);
}

ValueMatrix overlap_matrix(const Event& a, const Event& b) {
    ValueMatrix r(a.dur() + 1, b.dur() + 1);
    for (int l = 0; l <= a.dur(); ++l)
        for (int q = 0; q <= b.dur(); ++q)
            r(l, q) = intervals_overlap(a.t_min + l, a.duration, b.t_min + q, b.duration) ? 1.0 : 0.0;
    return r;
}

namespace {

void check_edges(int n, const std::vector<Edge>& edges, const char* what) {
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const auto [i, j] = edges[k];
        if (i < 0 || j >= n || i >= j) throw DomainError(std::string(what) + ": pairs must satisfy 0 <= i < j < n");
        if (k > 0 && edges[k - 1] >= edges[k]) throw DomainError(std::string(what) + ": pairs must be sorted and unique");
    }
}

void check_events(const SchedulingInstance& inst) {
    for (const auto& e : inst.events) {
        if (e.t_min > e.t_max) throw DomainError("scheduling: t_min > t_max");
        if (e.duration < 1) throw DomainError("scheduling: durations must be >= 1");
    }
    check_edges(static_cast<int>(inst.events.size()), inst.conflicts, "scheduling conflicts");
}

double pick_lambda(const Lambda& lambda, double load) { return lambda ? *lambda : 1.0 + load; }

/// Mixed-radix enumeration over all assignments, first variable fastest.
ClassicalOptimum enumerate(std::span<const int> radix, std::uint64_t max_space,
                           const std::function<double(std::span<const int>)>& objective) {
    std::uint64_t space = 1;
    for (int r : radix) {
        if (r < 1) throw DomainError("classical_optimum: empty domain");
        if (space > max_space / static_cast<std::uint64_t>(r))
            throw SizeError("classical_optimum: assignment space exceeds cap of " + std::to_string(max_space));
        space *= static_cast<std::uint64_t>(r);
    }
    ClassicalOptimum best;
    best.value = std::numeric_limits<double>::infinity();
    std::vector<int> x(radix.size(), 0);
    for (std::uint64_t count = 0; count < space; ++count) {
        const double v = objective(x);
        if (v < best.value - kEnergyTolerance) {
            best.value = v;
            best.argmin.clear();
            best.argmin.push_back(x);
        } else if (v <= best.value + kEnergyTolerance) {
            best.argmin.push_back(x);
        }
        for (std::size_t k = 0; k < x.size(); ++k) {
            if (++x[k] < radix[k]) break;
            x[k] = 0;
        }
    }
    return best;
}

}  // namespace

EncodedProblem build_unstructured(const UnstructuredInstance& inst, EncodingKind kind, Lambda lambda) {
    const auto n = inst.sizes.size();
    std::vector<double> load(n, 0.0);
    for (const auto& pair : inst.pairs) {
        if (pair.k < 0 || pair.l < 0 || static_cast<std::size_t>(pair.k) >= n || static_cast<std::size_t>(pair.l) >= n)
            throw DomainError("unstructured: pair refers to a missing variable");
        load[static_cast<std::size_t>(pair.k)] += pair.a.max_abs();
        load[static_cast<std::size_t>(pair.l)] += pair.a.max_abs();
    }
    EncodedProblem p;
    for (std::size_t k = 0; k < n; ++k) add_variable(p, kind, inst.sizes[k], pick_lambda(lambda, load[k]));
    for (const auto& pair : inst.pairs)
        add_interaction(p, p.variables[static_cast<std::size_t>(pair.k)], p.variables[static_cast<std::size_t>(pair.l)],
                        pair.a);
    return p;
}

EncodedProblem build_coloring(const ColoringInstance& inst, EncodingKind kind, Lambda lambda, double weight) {
    if (inst.n_colors < 2) throw DomainError("coloring: need at least two colours");
    check_edges(inst.n_vertices, inst.edges, "coloring edges");
    std::vector<double> load(static_cast<std::size_t>(inst.n_vertices), 0.0);
    for (const auto& [i, j] : inst.edges) {
        load[static_cast<std::size_t>(i)] += std::abs(weight);
        load[static_cast<std::size_t>(j)] += std::abs(weight);
    }
    EncodedProblem p;
    for (int v = 0; v < inst.n_vertices; ++v)
        add_variable(p, kind, inst.n_colors, pick_lambda(lambda, load[static_cast<std::size_t>(v)]));
    const ValueMatrix same = ValueMatrix::identity(inst.n_colors, weight);
    for (const auto& [i, j] : inst.edges)
        add_interaction(p, p.variables[static_cast<std::size_t>(i)], p.variables[static_cast<std::size_t>(j)], same);
    return p;
}

EncodedProblem build_scheduling(const SchedulingInstance& inst, EncodingKind kind, Lambda lambda, double weight) {
    check_events(inst);
    const auto n = inst.events.size();
    std::vector<double> load(n, 0.0);
    for (const auto& [i, j] : inst.conflicts) {
        const ValueMatrix r = overlap_matrix(inst.events[static_cast<std::size_t>(i)], inst.events[static_cast<std::size_t>(j)]);
        const double w = r.is_zero() ? 0.0 : std::abs(weight);
        load[static_cast<std::size_t>(i)] += w;
        load[static_cast<std::size_t>(j)] += w;
    }

    EncodedProblem p;
    std::vector<int> var_of(n, -1);
    for (std::size_t k = 0; k < n; ++k) {
        const Event& e = inst.events[k];
        if (e.dur() == 0) continue;
        var_of[k] = add_variable(p, kind, e.dur() + 1, pick_lambda(lambda, load[k])).id;
    }

    for (const auto& [i, j] : inst.conflicts) {
        const auto ui = static_cast<std::size_t>(i);
        const auto uj = static_cast<std::size_t>(j);
        ValueMatrix r = overlap_matrix(inst.events[ui], inst.events[uj]);
        if (r.is_zero() || weight == 0.0) continue;
        const int vi = var_of[ui];
        const int vj = var_of[uj];
        if (vi >= 0 && vj >= 0) {
            for (int l = 0; l < r.rows(); ++l)
                for (int q = 0; q < r.cols(); ++q) r(l, q) *= weight;
            add_interaction(p, p.variables[static_cast<std::size_t>(vi)], p.variables[static_cast<std::size_t>(vj)], r);
        } else if (vi >= 0) {
            for (int l = 0; l < r.rows(); ++l)
                if (r(l, 0) != 0.0) add_value_penalty(p, p.variables[static_cast<std::size_t>(vi)], l, weight);
        } else if (vj >= 0) {
            for (int q = 0; q < r.cols(); ++q)
                if (r(0, q) != 0.0) add_value_penalty(p, p.variables[static_cast<std::size_t>(vj)], q, weight);
        } else {
            p.model.add_offset(weight);
        }
    }
    return p;
}

std::optional<std::vector<int>> decode_schedule(const SchedulingInstance& inst, const EncodedProblem& p,
                                                std::span<const std::int8_t> s) {
    auto values = decode_all(p, s);
    if (!values) return std::nullopt;
    std::vector<int> offsets(inst.events.size(), 0);
    std::size_t next = 0;
    for (std::size_t k = 0; k < inst.events.size(); ++k) {
        if (inst.events[k].dur() == 0) continue;
        if (next >= values->size()) throw MappingError("decode_schedule: problem does not match instance");
        offsets[k] = (*values)[next++];
    }
    if (next != values->size()) throw MappingError("decode_schedule: problem does not match instance");
    return offsets;
}

double coloring_objective(const ColoringInstance& inst, std::span<const int> colors) {
    double count = 0.0;
    for (const auto& [i, j] : inst.edges)
        if (colors[static_cast<std::size_t>(i)] == colors[static_cast<std::size_t>(j)]) count += 1.0;
    return count;
}

double scheduling_objective(const SchedulingInstance& inst, std::span<const int> offsets) {
    double count = 0.0;
    for (const auto& [i, j] : inst.conflicts) {
        const Event& a = inst.events[static_cast<std::size_t>(i)];
        const Event& b = inst.events[static_cast<std::size_t>(j)];
        if (intervals_overlap(a.t_min + offsets[static_cast<std::size_t>(i)], a.duration,
                              b.t_min + offsets[static_cast<std::size_t>(j)], b.duration))
            count += 1.0;
    }
    return count;
}

double unstructured_objective(const UnstructuredInstance& inst, std::span<const int> values) {
    double total = 0.0;
    for (const auto& pair : inst.pairs)
        total += pair.a(values[static_cast<std::size_t>(pair.k)], values[static_cast<std::size_t>(pair.l)]);
    return total;
}

ClassicalOptimum classical_optimum(const ColoringInstance& inst, std::uint64_t max_space) {
    check_edges(inst.n_vertices, inst.edges, "coloring edges");
    const std::vector<int> radix(static_cast<std::size_t>(inst.n_vertices), inst.n_colors);
    return enumerate(radix, max_space, [&](std::span<const int> x) { return coloring_objective(inst, x); });
}

ClassicalOptimum classical_optimum(const SchedulingInstance& inst, std::uint64_t max_space) {
    check_events(inst);
    std::vector<int> radix;
    for (const auto& e : inst.events) radix.push_back(e.dur() + 1);
    return enumerate(radix, max_space, [&](std::span<const int> x) { return scheduling_objective(inst, x); });
}

ClassicalOptimum classical_optimum(const UnstructuredInstance& inst, std::uint64_t max_space) {
    return enumerate(inst.sizes, max_space, [&](std::span<const int> x) { return unstructured_objective(inst, x); });
}

double critical_ratio(int n_colors) {
    if (n_colors < 3) throw DomainError("critical_ratio: defined for n >= 3");
    const double n = n_colors;
    return (0.5 * n * n - 1.5 * n + 2.0) / (2.0 * n - 5.0);
}

}  // namespace dwall
