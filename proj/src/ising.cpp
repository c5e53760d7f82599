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

#include "dwall/ising.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <set>

#include "dwall/errors.hpp"

namespace dwall {

IsingModel::IsingModel(int n_qubits) {
    if (n_qubits < 0) throw DomainError("IsingModel: negative qubit count");
    h_.assign(static_cast<std::size_t>(n_qubits), 0.0);
}

int IsingModel::add_qubits(int count) {
    if (count < 0) throw DomainError("add_qubits: negative count");
    const int first = num_qubits();
    h_.resize(h_.size() + static_cast<std::size_t>(count), 0.0);
    return first;
}

void IsingModel::check_index(int qubit) const {
    if (qubit < 0 || qubit >= num_qubits())
        throw MappingError("qubit index " + std::to_string(qubit) + " out of range for " +
                           std::to_string(num_qubits()) + " qubits");
}

void IsingModel::add_field(int qubit, double value) {
    check_index(qubit);
    h_[static_cast<std::size_t>(qubit)] += value;
}

void IsingModel::add_coupler(int a, int b, double value) {
    check_index(a);
    check_index(b);
    if (a == b) throw DomainError("self-coupling on qubit " + std::to_string(a));
    if (value == 0.0) return;
    const QubitPair key = a < b ? QubitPair{a, b} : QubitPair{b, a};
    auto [it, inserted] = j_.try_emplace(key, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0.0) j_.erase(it);
    }
}

double IsingModel::field(int qubit) const {
    check_index(qubit);
    return h_[static_cast<std::size_t>(qubit)];
}

double IsingModel::coupler(int a, int b) const {
    const QubitPair key = a < b ? QubitPair{a, b} : QubitPair{b, a};
    auto it = j_.find(key);
    return it == j_.end() ? 0.0 : it->second;
}

std::size_t IsingModel::num_fields() const {
    return static_cast<std::size_t>(std::count_if(h_.begin(), h_.end(), [](double v) { return v != 0.0; }));
}

double energy(const IsingModel& model, std::span<const std::int8_t> spins) {
    if (spins.size() != static_cast<std::size_t>(model.num_qubits()))
        throw DimensionError("energy: spin vector has " + std::to_string(spins.size()) + " entries, model has " +
                             std::to_string(model.num_qubits()) + " qubits");
    double e = model.offset();
    const auto& h = model.fields();
    for (std::size_t i = 0; i < h.size(); ++i) e += h[i] * spins[i];
    for (const auto& [key, value] : model.couplers())
        e += value * spins[static_cast<std::size_t>(key.first)] * spins[static_cast<std::size_t>(key.second)];
    return e;
}

SpinAssignment spins_from_index(std::uint64_t index, int n_qubits) {
    SpinAssignment s(static_cast<std::size_t>(n_qubits));
    for (int q = 0; q < n_qubits; ++q) s[static_cast<std::size_t>(q)] = ((index >> q) & 1U) ? -1 : 1;
    return s;
}

std::uint64_t index_of(std::span<const std::int8_t> spins) {
    if (spins.size() > 64) throw SizeError("index_of: more than 64 spins");
    std::uint64_t index = 0;
    for (std::size_t q = 0; q < spins.size(); ++q)
        if (spins[q] < 0) index |= std::uint64_t{1} << q;
    return index;
}

SpinAssignment spins_from_bits(std::string_view bits) {
    SpinAssignment s;
    s.reserve(bits.size());
    for (char c : bits) {
        if (c == '0')
            s.push_back(1);
        else if (c == '1')
            s.push_back(-1);
        else
            throw ParseError(std::string("spins_from_bits: unexpected character '") + c + "'");
    }
    return s;
}

std::string bits_of(std::span<const std::int8_t> spins) {
    std::string out;
    out.reserve(spins.size());
    for (auto z : spins) out.push_back(z < 0 ? '1' : '0');
    return out;
}

IsingModel merge(const IsingModel& a, const IsingModel& b, std::span<const int> b_mapping) {
    if (b_mapping.size() != static_cast<std::size_t>(b.num_qubits()))
        throw MappingError("merge: mapping has " + std::to_string(b_mapping.size()) + " entries for " +
                           std::to_string(b.num_qubits()) + " qubits");
    std::set<int> seen;
    int n = a.num_qubits();
    for (int target : b_mapping) {
        if (target < 0) throw MappingError("merge: negative target index");
        if (!seen.insert(target).second)
            throw MappingError("merge: mapping is not injective (qubit " + std::to_string(target) + ")");
        n = std::max(n, target + 1);
    }
    IsingModel out = a;
    out.add_qubits(n - a.num_qubits());
    for (int q = 0; q < b.num_qubits(); ++q) out.add_field(b_mapping[static_cast<std::size_t>(q)], b.field(q));
    for (const auto& [key, value] : b.couplers())
        out.add_coupler(b_mapping[static_cast<std::size_t>(key.first)], b_mapping[static_cast<std::size_t>(key.second)],
                        value);
    out.add_offset(b.offset());
    return out;
}

IsingModel merge(const IsingModel& a, const IsingModel& b) {
    std::vector<int> mapping(static_cast<std::size_t>(b.num_qubits()));
    for (int q = 0; q < b.num_qubits(); ++q) mapping[static_cast<std::size_t>(q)] = a.num_qubits() + q;
    return merge(a, b, mapping);
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Running minimum with tolerance-grouped ties and the next distinct level.
struct LevelTracker {
    double best = kInf;
    double second = kInf;
    std::vector<std::uint64_t> ties;
    std::uint64_t count = 0;
    std::size_t cap = 0;

    void offer(double e, std::uint64_t index) {
        if (e < best - kEnergyTolerance) {
            second = std::min(second, best);
            best = e;
            ties.clear();
            ties.push_back(index);
            count = 1;
        } else if (e <= best + kEnergyTolerance) {
            // keep the `cap` smallest indices; ties is a max-heap
            if (ties.size() < cap) {
                ties.push_back(index);
                std::push_heap(ties.begin(), ties.end());
            } else if (cap > 0 && index < ties.front()) {
                std::pop_heap(ties.begin(), ties.end());
                ties.back() = index;
                std::push_heap(ties.begin(), ties.end());
            }
            ++count;
        } else {
            second = std::min(second, e);
        }
    }
};

struct Csr {
    int n = 0;
    std::vector<double> h;
    std::vector<int> start;
    std::vector<int> nbr;
    std::vector<double> w;
};

Csr compile(const IsingModel& model) {
    Csr c;
    c.n = model.num_qubits();
    c.h = model.fields();
    std::vector<std::vector<std::pair<int, double>>> adj(static_cast<std::size_t>(c.n));
    for (const auto& [key, value] : model.couplers()) {
        adj[static_cast<std::size_t>(key.first)].emplace_back(key.second, value);
        adj[static_cast<std::size_t>(key.second)].emplace_back(key.first, value);
    }
    c.start.push_back(0);
    for (const auto& row : adj) {
        for (const auto& [j, v] : row) {
            c.nbr.push_back(j);
            c.w.push_back(v);
        }
        c.start.push_back(static_cast<int>(c.nbr.size()));
    }
    return c;
}

void check_size(const IsingModel& model, const BruteForceOptions& options) {
    if (model.num_qubits() > options.max_qubits || model.num_qubits() > 62)
        throw SizeError("brute_force: " + std::to_string(model.num_qubits()) + " qubits exceeds cap of " +
                        std::to_string(options.max_qubits));
}

GroundSet finish(const IsingModel& model, std::vector<std::uint64_t> candidates, std::uint64_t degeneracy,
                 double second, const BruteForceOptions& options) {
    GroundSet g;
    const int n = model.num_qubits();
    std::sort(candidates.begin(), candidates.end());
    double best = kInf;
    std::vector<double> exact(candidates.size());
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        exact[k] = energy(model, spins_from_index(candidates[k], n));
        best = std::min(best, exact[k]);
    }
    g.energy = best;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        if (exact[k] > best + kEnergyTolerance) continue;
        g.indices.push_back(candidates[k]);
        g.states.push_back(spins_from_index(candidates[k], n));
    }
    g.degeneracy = degeneracy;
    g.truncated = degeneracy > g.indices.size() || g.indices.size() > options.max_states;
    if (g.indices.size() > options.max_states) {
        g.indices.resize(options.max_states);
        g.states.resize(options.max_states);
    }
    g.spectrum_gap = std::isinf(second) ? 0.0 : second - best;
    return g;
}

}  // namespace

GroundSet brute_force(const IsingModel& model, const BruteForceOptions& options) {
    check_size(model, options);
    const Csr c = compile(model);
    const int n = c.n;
    const int chunk_bits = std::min(n, 12);
    const std::uint64_t n_chunks = std::uint64_t{1} << (n - chunk_bits);
    const std::uint64_t chunk_len = std::uint64_t{1} << chunk_bits;

    std::vector<LevelTracker> partial(n_chunks);

#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t chunk = 0; chunk < static_cast<std::int64_t>(n_chunks); ++chunk) {
        LevelTracker& t = partial[static_cast<std::size_t>(chunk)];
        t.cap = options.max_states + 1;
        const std::uint64_t base = static_cast<std::uint64_t>(chunk) << chunk_bits;

        std::vector<int> z(static_cast<std::size_t>(n));
        for (int q = 0; q < n; ++q) z[static_cast<std::size_t>(q)] = ((base >> q) & 1U) ? -1 : 1;
        // local[q] = h_q + sum_j J_qj z_j, so flipping q changes E by -2 z_q local[q]
        std::vector<double> local(static_cast<std::size_t>(n));
        double e = model.offset();
        for (int q = 0; q < n; ++q) {
            double f = c.h[static_cast<std::size_t>(q)];
            for (int k = c.start[static_cast<std::size_t>(q)]; k < c.start[static_cast<std::size_t>(q) + 1]; ++k)
                f += c.w[static_cast<std::size_t>(k)] * z[static_cast<std::size_t>(c.nbr[static_cast<std::size_t>(k)])];
            local[static_cast<std::size_t>(q)] = f;
            e += z[static_cast<std::size_t>(q)] * (c.h[static_cast<std::size_t>(q)] + f) * 0.5;
        }
        std::uint64_t index = base;
        t.offer(e, index);
        for (std::uint64_t step = 1; step < chunk_len; ++step) {
            const int q = std::countr_zero(step);
            const auto uq = static_cast<std::size_t>(q);
            e -= 2.0 * z[uq] * local[uq];
            z[uq] = -z[uq];
            index ^= std::uint64_t{1} << q;
            for (int k = c.start[uq]; k < c.start[uq + 1]; ++k)
                local[static_cast<std::size_t>(c.nbr[static_cast<std::size_t>(k)])] +=
                    2.0 * c.w[static_cast<std::size_t>(k)] * z[uq];
            t.offer(e, index);
        }
    }

    double best = kInf;
    for (const auto& t : partial) best = std::min(best, t.best);
    double second = kInf;
    std::uint64_t degeneracy = 0;
    std::vector<std::uint64_t> candidates;
    for (const auto& t : partial) {
        if (t.best <= best + kEnergyTolerance) {
            degeneracy += t.count;
            candidates.insert(candidates.end(), t.ties.begin(), t.ties.end());
            second = std::min(second, t.second);
        } else {
            second = std::min(second, t.best);
        }
    }
    return finish(model, std::move(candidates), degeneracy, second, options);
}

namespace serial {

GroundSet brute_force(const IsingModel& model, const BruteForceOptions& options) {
    check_size(model, options);
    const int n = model.num_qubits();
    LevelTracker t;
    t.cap = options.max_states + 1;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t index = 0; index < total; ++index) t.offer(energy(model, spins_from_index(index, n)), index);
    return finish(model, std::move(t.ties), t.count, t.second, options);
}

}  // namespace serial

}  // namespace dwall
