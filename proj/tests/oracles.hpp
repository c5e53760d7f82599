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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dwall/embedding.hpp"
#include "dwall/ising.hpp"
#include "dwall/pauli.hpp"
#include "dwall/problems.hpp"

namespace oracle {

inline std::vector<std::int8_t> spins_of(std::uint64_t index, int n) {
    std::vector<std::int8_t> s(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) s[static_cast<std::size_t>(q)] = ((index >> q) & 1U) ? -1 : 1;
    return s;
}

inline double energy(const dwall::IsingModel& m, const std::vector<std::int8_t>& z) {
    double e = m.offset();
    for (int q = 0; q < m.num_qubits(); ++q) e += m.fields()[static_cast<std::size_t>(q)] * z[static_cast<std::size_t>(q)];
    for (const auto& [key, j] : m.couplers())
        e += j * z[static_cast<std::size_t>(key.first)] * z[static_cast<std::size_t>(key.second)];
    return e;
}

struct Ground {
    double energy = std::numeric_limits<double>::infinity();
    std::vector<std::uint64_t> indices;
    double gap = 0.0;
};

/// Direct enumeration of every basis state.
inline Ground ground(const dwall::IsingModel& m) {
    const int n = m.num_qubits();
    std::vector<double> e(std::size_t{1} << n);
    for (std::uint64_t i = 0; i < e.size(); ++i) e[i] = energy(m, spins_of(i, n));
    Ground g;
    for (double x : e) g.energy = std::min(g.energy, x);
    double next = std::numeric_limits<double>::infinity();
    for (std::uint64_t i = 0; i < e.size(); ++i) {
        if (std::abs(e[i] - g.energy) <= 1e-9)
            g.indices.push_back(i);
        else
            next = std::min(next, e[i]);
    }
    g.gap = std::isinf(next) ? 0.0 : next - g.energy;
    return g;
}

/// Bits of a basis index, qubit 0 first.
inline std::string bits(std::uint64_t index, int n) {
    std::string s;
    for (int q = 0; q < n; ++q) s += ((index >> q) & 1U) ? '1' : '0';
    return s;
}

/// Domain-wall codeword for value k of Z_m: k leading 1 bits.
inline std::vector<std::int8_t> dw_word(int m, int k) {
    std::vector<std::int8_t> s(static_cast<std::size_t>(m - 1), 1);
    for (int q = 0; q < k; ++q) s[static_cast<std::size_t>(q)] = -1;
    return s;
}

inline std::vector<std::int8_t> one_hot_word(int m, int k) {
    std::vector<std::int8_t> s(static_cast<std::size_t>(m), 1);
    s[static_cast<std::size_t>(k)] = -1;
    return s;
}

struct SmallGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    bool adjacent(int a, int b) const {
        for (const auto& [x, y] : edges)
            if ((x == a && y == b) || (x == b && y == a)) return true;
        return false;
    }
};

/// Smallest total chain size over every minor embedding of `source` into
/// `target`, found by assigning each target vertex to a chain or to none.
/// nullopt if there is no minor. Feasible for (|S| + 1)^|T| up to a few
/// million.
inline std::optional<int> min_minor_size(const SmallGraph& source, const SmallGraph& target) {
    const int s = source.n;
    const int t = target.n;
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(t), std::vector<bool>(static_cast<std::size_t>(t)));
    for (const auto& [a, b] : target.edges) adj[a][b] = adj[b][a] = true;
    std::vector<int> owner(static_cast<std::size_t>(t), -1);
    std::optional<int> best;

    const auto connected = [&](int c) {
        int start = -1, size = 0;
        for (int v = 0; v < t; ++v)
            if (owner[v] == c) {
                ++size;
                if (start < 0) start = v;
            }
        if (start < 0) return false;
        std::vector<bool> seen(static_cast<std::size_t>(t));
        std::vector<int> stack{start};
        seen[start] = true;
        int reached = 0;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            ++reached;
            for (int w = 0; w < t; ++w)
                if (adj[v][w] && !seen[w] && owner[w] == c) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        return reached == size;
    };
    const auto realised = [&](int a, int b) {
        for (int v = 0; v < t; ++v)
            for (int w = 0; w < t; ++w)
                if (owner[v] == a && owner[w] == b && adj[v][w]) return true;
        return false;
    };

    std::function<void(int, int)> assign = [&](int v, int used) {
        if (best && used >= *best) return;
        if (v == t) {
            for (int c = 0; c < s; ++c)
                if (!connected(c)) return;
            for (const auto& [a, b] : source.edges)
                if (!realised(a, b)) return;
            best = used;
            return;
        }
        for (int c = -1; c < s; ++c) {
            owner[v] = c;
            assign(v + 1, used + (c >= 0 ? 1 : 0));
        }
        owner[v] = -1;
    };
    assign(0, 0);
    return best;
}

inline SmallGraph complete(int n) {
    SmallGraph g{n, {}};
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) g.edges.emplace_back(a, b);
    return g;
}

/// Pegasus from line geometry: qubit (u, w, k, z) is a segment on line
/// 12 w + k, vertical for u = 0 and horizontal for u = 1, covering the 12
/// positions starting at 12 z + offset[k]. Perpendicular segments that cross
/// are coupled; so are the pairs (k, k ^ 1) and consecutive z on one line.
/// Qubits without a crossing are removed and the rest numbered in
/// ((u * L + w) * 12 + k) * (L - 1) + z order.
struct PegasusByGeometry {
    int n = 0;
    std::set<std::pair<int, int>> edges;
};

inline PegasusByGeometry pegasus_by_geometry(int L) {
    constexpr std::array<int, 12> vertical{2, 2, 2, 2, 10, 10, 10, 10, 6, 6, 6, 6};
    constexpr std::array<int, 12> horizontal{6, 6, 6, 6, 2, 2, 2, 2, 10, 10, 10, 10};
    struct Q {
        int u, w, k, z;
        int line() const { return 12 * w + k; }
    };
    std::vector<Q> all;
    for (int u = 0; u < 2; ++u)
        for (int w = 0; w < L; ++w)
            for (int k = 0; k < 12; ++k)
                for (int z = 0; z < L - 1; ++z) all.push_back({u, w, k, z});
    const auto start = [&](const Q& q) { return 12 * q.z + (q.u == 0 ? vertical : horizontal)[q.k]; };
    const auto covers = [&](const Q& q, int pos) { return pos >= start(q) && pos < start(q) + 12; };
    const auto crosses = [&](const Q& a, const Q& b) {
        return a.u != b.u && covers(a, b.line()) && covers(b, a.line());
    };

    std::vector<int> label(all.size(), -1);
    PegasusByGeometry g;
    for (std::size_t i = 0; i < all.size(); ++i) {
        bool has_crossing = false;
        for (std::size_t j = 0; j < all.size() && !has_crossing; ++j) has_crossing = crosses(all[i], all[j]);
        if (has_crossing) label[i] = g.n++;
    }
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            if (label[i] < 0 || label[j] < 0) continue;
            const Q& a = all[i];
            const Q& b = all[j];
            const bool same_line = a.u == b.u && a.w == b.w;
            const bool odd = same_line && a.z == b.z && (a.k ^ 1) == b.k;
            const bool external = same_line && a.k == b.k && std::abs(a.z - b.z) == 1;
            if (odd || external || crosses(a, b)) g.edges.emplace(label[i], label[j]);
        }
    return g;
}

// Matrix element straight from the tensor-product definition.
inline double element(const dwall::PauliTerm& t, std::uint64_t row, std::uint64_t col, int n) {
    double x = t.coefficient;
    for (int q = 0; q < n; ++q) {
        const int r = static_cast<int>((row >> q) & 1U);
        const int c = static_cast<int>((col >> q) & 1U);
        const auto it = t.factors.find(q);
        if (it == t.factors.end() || it->second == dwall::Pauli::Z) {
            if (r != c) return 0.0;
            if (it != t.factors.end() && c == 1) x = -x;
        } else if (r == c) {
            return 0.0;
        }
    }
    return x;
}

inline std::vector<double> dense_oracle(const dwall::PauliOperatorSum& op) {
    const std::size_t dim = std::size_t{1} << op.n_qubits;
    std::vector<double> m(dim * dim, 0.0);
    for (const auto& t : op.terms)
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) m[r * dim + c] += element(t, r, c, op.n_qubits);
    return m;
}

inline std::vector<double> product_oracle(const std::vector<double>& a, const std::vector<double>& b, std::size_t dim) {
    std::vector<double> out(dim * dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t k = 0; k < dim; ++k)
            for (std::size_t j = 0; j < dim; ++j) out[i * dim + j] += a[i * dim + k] * b[k * dim + j];
    return out;
}

using Assignment = std::vector<int>;

struct LogicalOptimum {
    double value = 0.0;
    std::set<Assignment> argmin;
};

inline LogicalOptimum enumerate(const std::vector<int>& radix, const std::function<double(const Assignment&)>& cost) {
    LogicalOptimum best{std::numeric_limits<double>::infinity(), {}};
    Assignment x(radix.size(), 0);
    while (true) {
        const double c = cost(x);
        if (c < best.value - 1e-9) {
            best.value = c;
            best.argmin.clear();
        }
        if (std::abs(c - best.value) <= 1e-9) best.argmin.insert(x);
        std::size_t k = 0;
        while (k < x.size() && ++x[k] == radix[k]) x[k++] = 0;
        if (k == x.size()) return best;
    }
}

inline LogicalOptimum coloring_oracle(const dwall::ColoringInstance& c) {
    return enumerate(std::vector<int>(static_cast<std::size_t>(c.n_vertices), c.n_colors), [&](const Assignment& x) {
        double v = 0;
        for (const auto& [i, j] : c.edges) v += x[static_cast<std::size_t>(i)] == x[static_cast<std::size_t>(j)];
        return v;
    });
}

inline LogicalOptimum scheduling_oracle(const dwall::SchedulingInstance& s) {
    std::vector<int> radix;
    for (const dwall::Event& e : s.events) radix.push_back(e.t_max - e.t_min + 1);
    return enumerate(radix, [&](const Assignment& x) {
        double v = 0;
        for (const auto& [i, j] : s.conflicts) {
            const dwall::Event& a = s.events[static_cast<std::size_t>(i)];
            const dwall::Event& b = s.events[static_cast<std::size_t>(j)];
            const int sa = a.t_min + x[static_cast<std::size_t>(i)];
            const int sb = b.t_min + x[static_cast<std::size_t>(j)];
            v += sa < sb + b.duration && sb < sa + a.duration;
        }
        return v;
    });
}

inline LogicalOptimum unstructured_oracle(const dwall::UnstructuredInstance& u) {
    return enumerate(u.sizes, [&](const Assignment& x) {
        double v = 0;
        for (const auto& p : u.pairs) v += p.a(x[static_cast<std::size_t>(p.k)], x[static_cast<std::size_t>(p.l)]);
        return v;
    });
}

// Independent restatement of the three embedding conditions.
inline bool is_minor_embedding(const dwall::Embedding& e, const dwall::HardwareGraph& s, const dwall::HardwareGraph& t) {
    if (static_cast<int>(e.chains.size()) != s.num_vertices()) return false;
    std::vector<int> owner(static_cast<std::size_t>(t.num_vertices()), -1);
    for (std::size_t u = 0; u < e.chains.size(); ++u) {
        if (e.chains[u].empty()) return false;
        for (int q : e.chains[u]) {
            if (q < 0 || q >= t.num_vertices() || owner[static_cast<std::size_t>(q)] >= 0) return false;
            owner[static_cast<std::size_t>(q)] = static_cast<int>(u);
        }
    }
    for (std::size_t u = 0; u < e.chains.size(); ++u) {
        std::vector<int> stack{e.chains[u][0]};
        std::set<int> seen{e.chains[u][0]};
        while (!stack.empty()) {
            const int q = stack.back();
            stack.pop_back();
            for (int w : t.neighbors(q))
                if (owner[static_cast<std::size_t>(w)] == static_cast<int>(u) && seen.insert(w).second)
                    stack.push_back(w);
        }
        if (seen.size() != e.chains[u].size()) return false;
    }
    for (const auto& [a, b] : s.edges()) {
        bool joined = false;
        for (int q : e.chains[static_cast<std::size_t>(a)])
            for (int w : t.neighbors(q)) joined = joined || owner[static_cast<std::size_t>(w)] == b;
        if (!joined) return false;
    }
    return true;
}

}  // namespace oracle
