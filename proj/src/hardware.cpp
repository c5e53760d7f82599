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

#include "dwall/hardware.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <string>

#include "dwall/errors.hpp"

namespace dwall {

std::string_view to_string(GraphFamily family) {
    switch (family) {
        case GraphFamily::Chimera:
            return "chimera";
        case GraphFamily::Pegasus:
            return "pegasus";
        case GraphFamily::Arbitrary:
            return "arbitrary";
    }
    return "arbitrary";
}

GraphFamily parse_family(std::string_view text) {
    if (text == "chimera") return GraphFamily::Chimera;
    if (text == "pegasus") return GraphFamily::Pegasus;
    if (text == "arbitrary") return GraphFamily::Arbitrary;
    throw ParseError("unknown graph family '" + std::string(text) + "'");
}

HardwareGraph::HardwareGraph(int n, std::vector<std::pair<int, int>> edges, GraphFamily family, int L)
    : family_(family), L_(L), n_(n) {
    if (n < 0) throw DomainError("graph: negative vertex count");
    for (auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n) throw MappingError("graph: edge endpoint out of range");
        if (a == b) throw DomainError("graph: self-loop on vertex " + std::to_string(a));
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adj_.assign(static_cast<std::size_t>(n), {});
    for (const auto& [a, b] : edges_) {
        adj_[static_cast<std::size_t>(a)].push_back(b);
        adj_[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
}

int HardwareGraph::max_degree() const {
    int best = 0;
    for (const auto& row : adj_) best = std::max(best, static_cast<int>(row.size()));
    return best;
}

bool HardwareGraph::has_edge(int a, int b) const {
    if (a < 0 || a >= n_) return false;
    const auto& row = adj_[static_cast<std::size_t>(a)];
    return std::binary_search(row.begin(), row.end(), b);
}

HardwareGraph chimera(int L) {
    if (L < 1) throw DomainError("chimera: L must be >= 1");
    const auto label = [L](int row, int col, int shore, int k) { return ((row * L + col) * 2 + shore) * 4 + k; };
    std::vector<std::pair<int, int>> edges;
    for (int row = 0; row < L; ++row) {
        for (int col = 0; col < L; ++col) {
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) edges.emplace_back(label(row, col, 0, a), label(row, col, 1, b));
            for (int k = 0; k < 4; ++k) {
                if (row + 1 < L) edges.emplace_back(label(row, col, 0, k), label(row + 1, col, 0, k));
                if (col + 1 < L) edges.emplace_back(label(row, col, 1, k), label(row, col + 1, 1, k));
            }
        }
    }
    return HardwareGraph(8 * L * L, std::move(edges), GraphFamily::Chimera, L);
}

namespace {

// Shift tables for vertical (u = 0) and horizontal (u = 1) qubits.
constexpr std::array<int, 12> kVerticalOffsets{2, 2, 2, 2, 10, 10, 10, 10, 6, 6, 6, 6};
constexpr std::array<int, 12> kHorizontalOffsets{6, 6, 6, 6, 2, 2, 2, 2, 10, 10, 10, 10};

}  // namespace

HardwareGraph pegasus(int L) {
    if (L < 2) throw DomainError("pegasus: L must be >= 2");
    const int zs = L - 1;
    const auto linear = [L, zs](int u, int w, int k, int z) { return ((u * L + w) * 12 + k) * zs + z; };
    const int total = 2 * L * 12 * zs;

    // Qubits in the first two and last two columns of the grid cross no
    // perpendicular qubit and are dropped.
    const auto in_fabric = [L](int w, int k) { return !(w == 0 && k < 2) && !(w == L - 1 && k >= 10); };

    std::vector<int> label(static_cast<std::size_t>(total), -1);
    int n = 0;
    for (int u = 0; u < 2; ++u)
        for (int w = 0; w < L; ++w)
            for (int k = 0; k < 12; ++k)
                for (int z = 0; z < zs; ++z)
                    if (in_fabric(w, k)) label[static_cast<std::size_t>(linear(u, w, k, z))] = n++;

    std::vector<std::pair<int, int>> edges;
    const auto add = [&](int a, int b) {
        const int la = label[static_cast<std::size_t>(a)];
        const int lb = label[static_cast<std::size_t>(b)];
        if (la >= 0 && lb >= 0) edges.emplace_back(la, lb);
    };
    for (int u = 0; u < 2; ++u)
        for (int w = 0; w < L; ++w)
            for (int k = 0; k < 12; ++k)
                for (int z = 0; z < zs; ++z) {
                    if (z + 1 < zs) add(linear(u, w, k, z), linear(u, w, k, z + 1));  // external
                    if (k % 2 == 0) add(linear(u, w, k, z), linear(u, w, k + 1, z));  // odd
                }
    // internal: vertical (0, w, k, z) crosses horizontal (1, w2, kk, z2)
    for (int w = 0; w < L; ++w)
        for (int k = 0; k < 12; ++k)
            for (int z = 0; z < zs; ++z)
                for (int kk = 0; kk < 12; ++kk) {
                    const int w2 = z + (kk < kVerticalOffsets[static_cast<std::size_t>(k)] ? 1 : 0);
                    const int z2 = w - (k < kHorizontalOffsets[static_cast<std::size_t>(kk)] ? 1 : 0);
                    if (w2 < 0 || w2 >= L || z2 < 0 || z2 >= zs) continue;
                    add(linear(0, w, k, z), linear(1, w2, kk, z2));
                }
    return HardwareGraph(n, std::move(edges), GraphFamily::Pegasus, L);
}

std::vector<int> bfs_distances(const HardwareGraph& g, int source) {
    if (source < 0 || source >= g.num_vertices()) throw MappingError("bfs: source out of range");
    std::vector<int> dist(static_cast<std::size_t>(g.num_vertices()), -1);
    std::queue<int> queue;
    dist[static_cast<std::size_t>(source)] = 0;
    queue.push(source);
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop();
        for (int w : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(w)] >= 0) continue;
            dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
            queue.push(w);
        }
    }
    return dist;
}

std::optional<int> edge_distance(const HardwareGraph& g, int a, int b) {
    if (b < 0 || b >= g.num_vertices()) throw MappingError("edge_distance: vertex out of range");
    const int d = bfs_distances(g, a)[static_cast<std::size_t>(b)];
    if (d < 0) return std::nullopt;
    return d;
}

HardwareGraph interaction_graph(const IsingModel& model) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(model.num_couplers());
    for (const auto& [key, value] : model.couplers())
        if (value != 0.0) edges.push_back(key);
    return HardwareGraph(model.num_qubits(), std::move(edges));
}

HardwareGraph interaction_graph(const EncodedProblem& p) { return interaction_graph(p.model); }

HardwareGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    return HardwareGraph(n, std::move(edges));
}

HardwareGraph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a + 1 < n; ++a) edges.emplace_back(a, a + 1);
    return HardwareGraph(n, std::move(edges));
}

HardwareGraph cycle_graph(int n) {
    if (n < 3) throw DomainError("cycle_graph: n must be >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a) edges.emplace_back(a, (a + 1) % n);
    return HardwareGraph(n, std::move(edges));
}

}  // namespace dwall
