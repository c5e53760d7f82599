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


#include "dwall/embedding.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <functional>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dwall/errors.hpp"
#include "dwall/rng.hpp"

namespace dwall {

std::size_t Embedding::total_size() const {
    std::size_t total = 0;
    for (const auto& c : chains) total += c.size();
    return total;
}

namespace {

using Distance = std::uint64_t;
constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

Distance saturating_add(Distance a, Distance b) { return a > kUnreachable - b ? kUnreachable : a + b; }

/// A chain stored as a tree. Each node maps to (parent, references), where
/// references count children, links held by neighbouring chains' paths and,
/// for the root, a pin that keeps it from ever being trimmed.
struct TreeChain {
    std::map<int, std::pair<int, int>> nodes;
    /// neighbour label -> qubit of this chain adjacent to (or shared with)
    /// that neighbour; the chain's own label maps to its root.
    std::map<int, int> links;
};

using HeapItem = std::tuple<Distance, std::uint32_t, int>;

/// Binary min-heap whose storage is reused across searches.
class MinHeap {
public:
    void clear() { items_.clear(); }
    bool empty() const { return items_.empty(); }
    const HeapItem& top() const { return items_.front(); }
    template <typename... Args>
    void emplace(Args&&... args) {
        items_.emplace_back(std::forward<Args>(args)...);
        std::push_heap(items_.begin(), items_.end(), std::greater<>{});
    }
    void pop() {
        std::pop_heap(items_.begin(), items_.end(), std::greater<>{});
        items_.pop_back();
    }

private:
    std::vector<HeapItem> items_;
};

/// Lexicographic progress measure: while chains overlap, (max fill, number of
/// qubits at max fill); once disjoint, (max chain size, chains at max size,
/// total size).
struct Stats {
    bool embedded = false;
    std::array<std::size_t, 3> key{};

    bool better_than(const Stats& o) const {
        if (embedded != o.embedded) return embedded;
        return key < o.key;
    }
};

/// Chain growth with overfill-then-repair refinement. Overlap weights grow
/// geometrically with the number of chains sharing a qubit, with the base
/// chosen as large as the integer range allows so that fewer overlaps always
/// dominate shorter paths. Path segments built to reach a neighbour are handed
/// to that neighbour and reclaimed before the next rebuild, which lets chains
/// migrate out of crowded regions.
class ChainGrower {
public:
    ChainGrower(const HardwareGraph& source, const HardwareGraph& target, const EmbedParams& params,
                std::uint64_t seed)
        : src_(source),
          tgt_(target),
          params_(params),
          rng_(seed),
          n_(source.num_vertices()),
          nq_(target.num_vertices()),
          chains_(static_cast<std::size_t>(n_)),
          usage_(static_cast<std::size_t>(nq_), 0),
          total_(static_cast<std::size_t>(nq_)),
          key_(static_cast<std::size_t>(nq_)) {
        const double margin = static_cast<double>(nq_) * static_cast<double>(source.max_degree() + 2);
        ultramax_ = 62.0 - std::log2(std::max(2.0, margin));
        default_bound_ = std::max(2, static_cast<int>(std::floor(ultramax_)));
        bound_ = default_bound_;
    }

    std::optional<Embedding> run() {
        if (!initialize()) return std::nullopt;
        best_stats_ = stats();
        best_ = chains_;
        if (!best_stats_.embedded && !repair()) return std::nullopt;
        chains_ = best_;
        refresh_usage();
        shorten();

        Embedding e;
        e.chains.resize(static_cast<std::size_t>(n_));
        for (int u = 0; u < n_; ++u)
            for (const auto& [q, node] : best_[static_cast<std::size_t>(u)].nodes)
                e.chains[static_cast<std::size_t>(u)].push_back(q);
        return e;
    }

private:
    TreeChain& chain(int u) { return chains_[static_cast<std::size_t>(u)]; }
    int& usage(int q) { return usage_[static_cast<std::size_t>(q)]; }
    bool has(int u, int q) { return chain(u).nodes.count(q) != 0; }
    std::size_t size(int u) { return chain(u).nodes.size(); }

    // ---- tree chain primitives -------------------------------------------

    void set_root(int u, int q) {
        chain(u).nodes.emplace(q, std::pair{q, 2});
        chain(u).links.emplace(u, q);
        ++usage(q);
    }

    void add_leaf(int u, int q, int parent) {
        chain(u).nodes.emplace(q, std::pair{parent, 0});
        ++chain(u).nodes.at(parent).second;
        ++usage(q);
    }

    /// Removes q if it is an unreferenced leaf; returns its parent in that
    /// case and q otherwise.
    int trim_leaf(int u, int q) {
        auto it = chain(u).nodes.find(q);
        if (it->second.second != 0) return q;
        const int p = it->second.first;
        chain(u).nodes.erase(it);
        --chain(u).nodes.at(p).second;
        --usage(q);
        return p;
    }

    void trim_branch(int u, int q) {
        for (int p = trim_leaf(u, q); p != q; p = trim_leaf(u, q)) q = p;
    }

    void set_link(int u, int v, int q) {
        chain(u).links[v] = q;
        ++chain(u).nodes.at(q).second;
    }

    int drop_link(int u, int v) {
        auto it = chain(u).links.find(v);
        if (it == chain(u).links.end()) return -1;
        const int q = it->second;
        chain(u).links.erase(it);
        --chain(u).nodes.at(q).second;
        return q;
    }

    void clear(int u) {
        for (const auto& [q, node] : chain(u).nodes) --usage(q);
        chain(u).nodes.clear();
        chain(u).links.clear();
    }

    void tear_out(int u) {
        clear(u);
        for (int v : src_.neighbors(u)) drop_link(v, u);
    }

    /// Moves the segment of v's chain that only serves to reach u over to u,
    /// stopping once u has `limit` qubits (0 = no limit).
    void steal(int u, int v, std::size_t limit) {
        int q = drop_link(u, v);
        int p = drop_link(v, u);
        while (limit == 0 || size(u) < limit) {
            const int r = trim_leaf(v, p);
            if (r == p) break;
            auto it = chain(u).nodes.find(p);
            if (it == chain(u).nodes.end()) {
                add_leaf(u, p, q);
            } else if (p != q) {
                ++it->second.second;
                trim_branch(u, q);
                --chain(u).nodes.at(p).second;
            }
            q = p;
            p = r;
        }
        set_link(u, v, q);
        set_link(v, u, p);
    }

    bool linked(int u, int v) { return chain(u).links.count(v) != 0 && chain(v).links.count(u) != 0; }

    void steal_all(int u) {
        for (int v : src_.neighbors(u))
            if (linked(u, v)) steal(u, v, 0);
    }

    void flip_back(int u, std::size_t limit) {
        for (int v : src_.neighbors(u))
            if (size(v) != 0 && linked(u, v)) steal(v, u, limit);
    }

    /// Adds the path from q (already in u) along `parent` into v's chain.
    void link_path(int u, int v, int q, const std::vector<int>& parent) {
        int p = parent[static_cast<std::size_t>(q)];
        if (p < 0) {
            p = q;
        } else {
            while (!has(v, p)) {
                if (has(u, p)) {
                    ++chain(u).nodes.at(p).second;
                    trim_branch(u, q);
                    --chain(u).nodes.at(p).second;
                } else {
                    add_leaf(u, p, q);
                }
                q = p;
                p = parent[static_cast<std::size_t>(p)];
            }
        }
        set_link(u, v, q);
        set_link(v, u, p);
    }

    struct Frozen {
        TreeChain chain;
        std::vector<std::pair<int, int>> incoming;
    };

    Frozen freeze(int u) {
        Frozen f;
        for (int v : src_.neighbors(u)) {
            const int p = drop_link(v, u);
            if (p >= 0) f.incoming.emplace_back(v, p);
        }
        for (const auto& [q, node] : chain(u).nodes) --usage(q);
        f.chain = std::move(chain(u));
        chain(u) = TreeChain{};
        return f;
    }

    void thaw(int u, Frozen f) {
        chain(u) = std::move(f.chain);
        for (const auto& [q, node] : chain(u).nodes) ++usage(q);
        for (const auto& [v, p] : f.incoming) set_link(v, u, p);
    }

    void refresh_usage() {
        std::fill(usage_.begin(), usage_.end(), 0);
        for (const auto& c : chains_)
            for (const auto& [q, node] : c.nodes) ++usage(q);
    }

    // ---- chain search ------------------------------------------------------

    void compute_weights() {
        const int maxw = *std::max_element(usage_.begin(), usage_.end());
        const double log2base = maxw <= 0 ? 1.0 : ultramax_ / maxw;
        const double base = std::exp2(log2base);
        double power = 1.0;
        weight_table_.fill(kUnreachable);
        for (int i = 0; i <= std::min(maxw, 63); ++i) {
            weight_table_[static_cast<std::size_t>(i)] = static_cast<Distance>(power);
            power *= base;
        }
    }

    Distance weight(int q) const {
        const int c = usage_[static_cast<std::size_t>(q)];
        return c >= 64 ? kUnreachable : weight_table_[static_cast<std::size_t>(c)];
    }

    bool allowed(int q) const { return usage_[static_cast<std::size_t>(q)] < bound_; }

    /// Entry cost per qubit; kUnreachable marks qubits at or above the bound.
    void compute_costs() {
        compute_weights();
        cost_.resize(static_cast<std::size_t>(nq_));
        for (int q = 0; q < nq_; ++q) cost_[static_cast<std::size_t>(q)] = allowed(q) ? weight(q) : kUnreachable;
    }

    void shortest_paths(int v, std::vector<Distance>& dist, std::vector<int>& parent) {
        dist.assign(static_cast<std::size_t>(nq_), kUnreachable);
        parent.assign(static_cast<std::size_t>(nq_), -1);
        seen_.assign(static_cast<std::size_t>(nq_), 0);
        heap_.clear();
        auto& heap = heap_;
        for (const auto& [q, node] : chain(v).nodes) {
            seen_[static_cast<std::size_t>(q)] = 1;
            heap.emplace(0, key_[static_cast<std::size_t>(q)], q);
        }
        while (!heap.empty()) {
            const auto [d, key, y] = heap.top();
            heap.pop();
            dist[static_cast<std::size_t>(y)] = d;
            for (int x : tgt_.neighbors(y)) {
                const auto xs = static_cast<std::size_t>(x);
                if (seen_[xs]) continue;
                seen_[xs] = 1;
                if (cost_[xs] == kUnreachable) continue;
                parent[xs] = y;
                heap.emplace(saturating_add(d, cost_[xs]), key_[xs], x);
            }
        }
    }

    /// Builds a new chain for u (which must be empty) touching every placed
    /// neighbour. Fails only if no root is reachable under the current bound.
    bool find_chain(int u, std::size_t limit) {
        compute_costs();
        for (auto& k : key_) k = static_cast<std::uint32_t>(rng_.next());

        std::vector<int> placed;
        for (int v : src_.neighbors(u))
            if (size(v) != 0) placed.push_back(v);
        rng_.shuffle(placed);
        if (dist_.size() < placed.size()) {
            dist_.resize(placed.size());
            parent_.resize(placed.size());
        }

        for (std::size_t q = 0; q < total_.size(); ++q) total_[q] = cost_[q] == kUnreachable ? kUnreachable : 0;
        for (std::size_t k = 0; k < placed.size(); ++k) {
            shortest_paths(placed[k], dist_[k], parent_[k]);
            for (const auto& [q, node] : chain(placed[k]).nodes) {
                auto& t = total_[static_cast<std::size_t>(q)];
                t = saturating_add(t, cost_[static_cast<std::size_t>(q)]);
            }
            for (std::size_t q = 0; q < total_.size(); ++q) total_[q] = saturating_add(total_[q], dist_[k][q]);
        }
        if (placed.empty())
            for (int q = 0; q < nq_; ++q) {
                auto& t = total_[static_cast<std::size_t>(q)];
                if (t != kUnreachable) t = cost_[static_cast<std::size_t>(q)];
            }

        const Distance best = *std::min_element(total_.begin(), total_.end());
        if (best == kUnreachable) return false;
        std::vector<int> minima;
        for (int q = 0; q < nq_; ++q)
            if (total_[static_cast<std::size_t>(q)] == best) minima.push_back(q);
        const int root = minima[static_cast<std::size_t>(
            rng_.uniform_int(0, static_cast<std::int64_t>(minima.size()) - 1))];

        set_root(u, root);
        for (std::size_t k = 0; k < placed.size(); ++k) {
            // start from the closest branching qubit already in the chain
            int start = root;
            Distance d = dist_[k][static_cast<std::size_t>(root)];
            for (const auto& [q, node] : chain(u).nodes) {
                if (node.second <= 1) continue;
                if (dist_[k][static_cast<std::size_t>(q)] < d) {
                    d = dist_[k][static_cast<std::size_t>(q)];
                    start = q;
                }
            }
            link_path(u, placed[k], start, parent_[k]);
        }
        flip_back(u, limit);
        return true;
    }

    // ---- passes ------------------------------------------------------------

    std::vector<int> random_bfs_order() {
        std::vector<int> order;
        order.reserve(static_cast<std::size_t>(n_));
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        std::vector<int> roots(static_cast<std::size_t>(n_));
        for (int u = 0; u < n_; ++u) roots[static_cast<std::size_t>(u)] = u;
        rng_.shuffle(roots);
        std::vector<int> nbrs;
        for (int root : roots) {
            if (seen[static_cast<std::size_t>(root)]) continue;
            seen[static_cast<std::size_t>(root)] = 1;
            std::size_t head = order.size();
            order.push_back(root);
            while (head < order.size()) {
                nbrs = src_.neighbors(order[head++]);
                rng_.shuffle(nbrs);
                for (int w : nbrs) {
                    if (seen[static_cast<std::size_t>(w)]) continue;
                    seen[static_cast<std::size_t>(w)] = 1;
                    order.push_back(w);
                }
            }
        }
        return order;
    }

    Stats stats() {
        Stats s;
        const int maxw = *std::max_element(usage_.begin(), usage_.end());
        if (maxw > 1) {
            s.key[0] = static_cast<std::size_t>(maxw);
            s.key[1] = static_cast<std::size_t>(std::count(usage_.begin(), usage_.end(), maxw));
            return s;
        }
        s.embedded = true;
        std::size_t longest = 0;
        std::size_t at_longest = 0;
        std::size_t total = 0;
        for (int u = 0; u < n_; ++u) {
            const std::size_t len = size(u);
            total += len;
            if (len > longest) {
                longest = len;
                at_longest = 0;
            }
            if (len == longest) ++at_longest;
        }
        s.key = {longest, at_longest, total};
        return s;
    }

    bool check_improvement() {
        const Stats now = stats();
        if (!now.better_than(best_stats_)) return false;
        best_stats_ = now;
        best_ = chains_;
        return true;
    }

    bool initialize() {
        for (int u : random_bfs_order())
            if (!find_chain(u, 0)) return false;
        return true;
    }

    /// 1 = improved, 0 = no progress, -1 = a chain could not be rebuilt.
    int overfill_pass(bool desperate) {
        bool improved = false;
        for (int u : random_bfs_order()) {
            if (desperate) steal_all(u);
            tear_out(u);
            if (!find_chain(u, 0)) return -1;
            improved |= check_improvement();
            if (best_stats_.embedded) break;
        }
        return improved ? 1 : 0;
    }

    /// Rebuilds each chain without letting it touch qubits as full as the
    /// fullest qubit it used before; chains that cannot be rebuilt that way
    /// are restored.
    int pushdown_pass() {
        bool improved = false;
        std::vector<int> order(static_cast<std::size_t>(n_));
        for (int u = 0; u < n_; ++u) order[static_cast<std::size_t>(u)] = u;
        rng_.shuffle(order);
        for (int u : order) {
            if (pushback_ < n_) {
                steal_all(u);
                int maxfill = 0;
                for (const auto& [q, node] : chain(u).nodes) maxfill = std::max(maxfill, usage(q));
                Frozen frozen = freeze(u);
                bound_ = maxfill;
                const bool ok = find_chain(u, 0);
                bound_ = default_bound_;
                if (!ok) {
                    pushback_ += 3;
                    thaw(u, std::move(frozen));
                    flip_back(u, 0);
                }
            } else {
                steal_all(u);
                tear_out(u);
                if (!find_chain(u, 0)) return -1;
            }
            improved |= check_improvement();
            if (best_stats_.embedded) break;
        }
        if (!improved) pushback_ += std::max(1, 2 * n_ / std::max(1, params_.rounds));
        return improved ? 1 : 0;
    }

    bool repair() {
        int patience = params_.max_no_improvement;
        pushback_ = 0;
        for (int round = 0; round < params_.rounds && patience > 0 && !best_stats_.embedded; ++round) {
            const bool desperate = patience <= 1 || round + 1 == params_.rounds;
            int r = 0;
            if (pushback_ < n_) {
                r = pushdown_pass();
            } else {
                --pushback_;
                r = overfill_pass(desperate);
            }
            if (r == -1) {
                chains_ = best_;
                refresh_usage();
            }
            if (r == 1) {
                patience = params_.max_no_improvement;
                pushback_ = 0;
            } else {
                --patience;
            }
        }
        return best_stats_.embedded;
    }

    /// Rebuilds chains through free qubits only, keeping the result whenever
    /// the chain-length statistics improve.
    void shorten() {
        bound_ = 1;
        int patience = params_.tighten_rounds;
        while (patience > 0) {
            const std::vector<TreeChain> last = chains_;
            const std::size_t limit = best_stats_.key[0];
            bool improved = false;
            bool failed = false;
            for (int u : random_bfs_order()) {
                steal_all(u);
                tear_out(u);
                if (!find_chain(u, limit)) {
                    failed = true;
                    break;
                }
                improved |= check_improvement();
            }
            if (failed) {
                chains_ = last;
                refresh_usage();
            }
            patience = improved && !failed ? params_.tighten_rounds : patience - 1;
        }
        bound_ = default_bound_;
    }

    const HardwareGraph& src_;
    const HardwareGraph& tgt_;
    const EmbedParams& params_;
    SplitMix64 rng_;
    int n_;
    int nq_;
    std::vector<TreeChain> chains_;
    std::vector<int> usage_;
    double ultramax_ = 0.0;
    int default_bound_ = 2;
    int bound_ = 2;
    int pushback_ = 0;
    std::array<Distance, 64> weight_table_{};
    std::vector<Distance> total_;
    std::vector<Distance> cost_;
    std::vector<std::uint32_t> key_;
    std::vector<char> seen_;
    MinHeap heap_;
    std::vector<std::vector<Distance>> dist_;
    std::vector<std::vector<int>> parent_;
    Stats best_stats_;
    std::vector<TreeChain> best_;
};

std::optional<Embedding> identity_if_subgraph(const HardwareGraph& source, const HardwareGraph& target) {
    if (source.num_vertices() > target.num_vertices()) return std::nullopt;
    for (const auto& [a, b] : source.edges())
        if (!target.has_edge(a, b)) return std::nullopt;
    Embedding e;
    e.chains.resize(static_cast<std::size_t>(source.num_vertices()));
    for (int v = 0; v < source.num_vertices(); ++v) e.chains[static_cast<std::size_t>(v)] = {v};
    return e;
}

void check_inputs(const HardwareGraph& source, const HardwareGraph& target, const EmbedParams& params) {
    if (source.num_vertices() == 0 || target.num_vertices() == 0)
        throw DomainError("find_embedding: source and target must be nonempty");
    if (params.max_tries < 1) throw DomainError("find_embedding: max_tries must be >= 1");
}

}  // namespace

std::optional<Embedding> embedding_try(const HardwareGraph& source, const HardwareGraph& target,
                                       const EmbedParams& params, int try_index) {
    check_inputs(source, target, params);
    if (source.num_vertices() > target.num_vertices()) return std::nullopt;
    ChainGrower grower(source, target, params, derive_seed(params.seed, static_cast<std::uint64_t>(try_index), 0));
    auto e = grower.run();
    if (e && !validate(*e, source, target).valid) return std::nullopt;
    return e;
}

std::optional<Embedding> find_embedding(const HardwareGraph& source, const HardwareGraph& target,
                                        const EmbedParams& params) {
    check_inputs(source, target, params);
    if (auto e = identity_if_subgraph(source, target)) return e;
    if (source.num_vertices() > target.num_vertices()) return std::nullopt;

    int batch = 1;
#ifdef _OPENMP
    if (!omp_in_parallel()) batch = std::max(1, omp_get_max_threads());
#endif
    for (int first = 0; first < params.max_tries; first += batch) {
        const int count = std::min(batch, params.max_tries - first);
        std::vector<std::optional<Embedding>> results(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 1) if (count > 1)
        for (int k = 0; k < count; ++k)
            results[static_cast<std::size_t>(k)] = embedding_try(source, target, params, first + k);
        for (auto& r : results)
            if (r) return r;
    }
    return std::nullopt;
}

EmbeddingCheck validate(const Embedding& e, const HardwareGraph& source, const HardwareGraph& target) {
    EmbeddingCheck check;
    const auto fail = [&](std::string msg) {
        check.valid = false;
        check.violations.push_back(std::move(msg));
    };
    if (e.chains.size() != static_cast<std::size_t>(source.num_vertices())) {
        fail("chain count " + std::to_string(e.chains.size()) + " differs from source vertex count " +
             std::to_string(source.num_vertices()));
        return check;
    }

    std::vector<int> owner(static_cast<std::size_t>(target.num_vertices()), -1);
    for (int u = 0; u < source.num_vertices(); ++u) {
        const auto& chain = e.chains[static_cast<std::size_t>(u)];
        if (chain.empty()) {
            fail("empty chain for source vertex " + std::to_string(u));
            continue;
        }
        for (int q : chain) {
            if (q < 0 || q >= target.num_vertices()) {
                fail("chain " + std::to_string(u) + " uses nonexistent target vertex " + std::to_string(q));
                continue;
            }
            int& o = owner[static_cast<std::size_t>(q)];
            if (o >= 0 && o != u)
                fail("chains " + std::to_string(o) + " and " + std::to_string(u) + " overlap at target vertex " +
                     std::to_string(q));
            else if (o == u)
                fail("chain " + std::to_string(u) + " lists target vertex " + std::to_string(q) + " twice");
            else
                o = u;
        }
    }

    // connectivity: BFS restricted to chain members
    std::vector<char> in_chain(static_cast<std::size_t>(target.num_vertices()), 0);
    for (int u = 0; u < source.num_vertices(); ++u) {
        const auto& chain = e.chains[static_cast<std::size_t>(u)];
        std::vector<int> members;
        for (int q : chain)
            if (q >= 0 && q < target.num_vertices()) members.push_back(q);
        if (members.empty()) continue;
        for (int q : members) in_chain[static_cast<std::size_t>(q)] = 1;
        std::vector<int> stack{members.front()};
        in_chain[static_cast<std::size_t>(members.front())] = 2;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const int y = stack.back();
            stack.pop_back();
            for (int x : target.neighbors(y)) {
                if (in_chain[static_cast<std::size_t>(x)] != 1) continue;
                in_chain[static_cast<std::size_t>(x)] = 2;
                ++reached;
                stack.push_back(x);
            }
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        if (reached != members.size()) fail("disconnected chain for source vertex " + std::to_string(u));
        for (int q : members) in_chain[static_cast<std::size_t>(q)] = 0;
    }

    std::vector<char> mark(static_cast<std::size_t>(target.num_vertices()), 0);
    const auto in_range = [&](int q) { return q >= 0 && q < target.num_vertices(); };
    for (const auto& [a, b] : source.edges()) {
        const auto& ca = e.chains[static_cast<std::size_t>(a)];
        const auto& cb = e.chains[static_cast<std::size_t>(b)];
        for (int q : cb)
            if (in_range(q)) mark[static_cast<std::size_t>(q)] = 1;
        bool found = false;
        for (int q : ca) {
            if (!in_range(q)) continue;
            for (int x : target.neighbors(q))
                if (mark[static_cast<std::size_t>(x)]) found = true;
            if (found) break;
        }
        for (int q : cb)
            if (in_range(q)) mark[static_cast<std::size_t>(q)] = 0;
        if (!found)
            fail("source edge (" + std::to_string(a) + ", " + std::to_string(b) + ") has no coupler between its chains");
    }
    return check;
}

double embedding_ratio(const Embedding& e, const HardwareGraph& source, const HardwareGraph& target) {
    const EmbeddingCheck check = validate(e, source, target);
    if (!check.valid) throw DomainError("embedding_ratio: invalid embedding (" + check.violations.front() + ")");
    return static_cast<double>(e.total_size()) / static_cast<double>(source.num_vertices());
}

HardwareGraph make_target(GraphFamily family, int L) {
    switch (family) {
        case GraphFamily::Chimera:
            return chimera(L);
        case GraphFamily::Pegasus:
            return pegasus(L);
        case GraphFamily::Arbitrary:
            break;
    }
    throw DomainError("make_target: family must be chimera or pegasus");
}

int family_min_size(GraphFamily family) { return family == GraphFamily::Pegasus ? 2 : 1; }

SizeSearchResult min_embeddable_size(const HardwareGraph& source, GraphFamily family, const EmbedParams& params,
                                     const SizeSearchOptions& options) {
    const int lo = family_min_size(family);
    if (options.ceiling < lo) throw DomainError("min_embeddable_size: ceiling below family minimum");
    SizeSearchResult result;
    const auto attempt = [&](int L) {
        HardwareGraph target = make_target(family, L);
        auto e = find_embedding(source, target, params);
        result.attempts.emplace_back(L, e.has_value());
        if (e) {
            result.L = L;
            result.embedding = std::move(*e);
            result.target = std::move(target);
        }
        return e.has_value();
    };

    int L = std::clamp(options.warm_start, lo, options.ceiling);
    if (attempt(L)) {
        while (L > lo && attempt(L - 1)) --L;
        return result;
    }
    while (++L <= options.ceiling)
        if (attempt(L)) return result;
    return result;
}

}  // namespace dwall
