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

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "dwall/encoding.hpp"

namespace dwall {

enum class GraphFamily { Chimera, Pegasus, Arbitrary };

std::string_view to_string(GraphFamily family);
GraphFamily parse_family(std::string_view text);

/// Simple undirected graph on vertices 0..n-1 with sorted edge list (a < b)
/// and sorted adjacency lists. Used both for hardware targets and for the
/// logical interaction graphs that get embedded into them.
class HardwareGraph {
public:
    HardwareGraph() = default;
    /// Duplicate edges are merged; self-loops and out-of-range endpoints throw.
    HardwareGraph(int n, std::vector<std::pair<int, int>> edges, GraphFamily family = GraphFamily::Arbitrary, int L = 0);

    GraphFamily family() const { return family_; }
    int size_param() const { return L_; }
    int num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    int max_degree() const;
    bool has_edge(int a, int b) const;

    bool operator==(const HardwareGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    GraphFamily family_ = GraphFamily::Arbitrary;
    int L_ = 0;
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// L x L grid of K_{4,4} cells. Vertex ((row * L + col) * 2 + shore) * 4 + k;
/// shore 0 couples vertically between cells, shore 1 horizontally.
HardwareGraph chimera(int L);

/// Pegasus P_L from the (u, w, k, z) coordinate construction with the
/// standard shift tables, keeping only qubits that have internal couplers
/// (8 (L-1)(3L-1) vertices). Vertices are numbered by increasing
/// ((u * L + w) * 12 + k) * (L - 1) + z.
HardwareGraph pegasus(int L);

/// Shortest path length in edges, nullopt if b is unreachable from a.
std::optional<int> edge_distance(const HardwareGraph& g, int a, int b);
/// BFS distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const HardwareGraph& g, int source);

/// Qubits as vertices, nonzero couplers as edges.
HardwareGraph interaction_graph(const IsingModel& model);
HardwareGraph interaction_graph(const EncodedProblem& p);

HardwareGraph complete_graph(int n);
HardwareGraph path_graph(int n);
HardwareGraph cycle_graph(int n);

}  // namespace dwall
