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


#include <gtest/gtest.h>
#include <omp.h>

#include "dwall/embedding.hpp"
#include "dwall/errors.hpp"
#include "dwall/problems.hpp"
#include "dwall/rng.hpp"
#include "oracles.hpp"

namespace dwall {
namespace {

oracle::SmallGraph small(const HardwareGraph& g) { return {g.num_vertices(), g.edges()}; }

using oracle::is_minor_embedding;

HardwareGraph random_graph(SplitMix64& rng, int n, double p) { return HardwareGraph(n, gen_erdos_renyi(n, p, rng.next())); }

TEST(FindEmbedding, SubgraphGetsSingletonChains) {
    const HardwareGraph target = chimera(1);
    const HardwareGraph source(6, {{0, 4}, {1, 5}, {0, 5}});
    const auto e = find_embedding(source, target);
    ASSERT_TRUE(e.has_value());
    for (int v = 0; v < 6; ++v) EXPECT_EQ(e->chains[static_cast<std::size_t>(v)], std::vector<int>{v});
    EXPECT_EQ(embedding_ratio(*e, source, target), 1.0);
}

TEST(FindEmbedding, TriangleIntoSixCycle) {
    const HardwareGraph k3 = complete_graph(3);
    const HardwareGraph c6 = cycle_graph(6);
    const auto best = oracle::min_minor_size(small(k3), small(c6));
    ASSERT_TRUE(best.has_value());
    EXPECT_EQ(*best, 6);
    const auto e = find_embedding(k3, c6);
    ASSERT_TRUE(e.has_value());
    EXPECT_TRUE(validate(*e, k3, c6).valid);
    EXPECT_TRUE(is_minor_embedding(*e, k3, c6));
    EXPECT_GE(static_cast<int>(e->total_size()), 4);
    EXPECT_GE(static_cast<int>(e->total_size()), *best);
}

TEST(FindEmbedding, CompleteFiveHasMinorInOneCell) {
    const HardwareGraph k5 = complete_graph(5);
    const HardwareGraph cell = chimera(1);
    const auto best = oracle::min_minor_size(small(k5), small(cell));
    ASSERT_TRUE(best.has_value());
    EXPECT_EQ(*best, 8);
    const auto e = find_embedding(k5, cell);
    ASSERT_TRUE(e.has_value());
    EXPECT_TRUE(is_minor_embedding(*e, k5, cell));
}

TEST(FindEmbedding, CompleteSixHasNoMinorInOneCell) {
    EXPECT_FALSE(oracle::min_minor_size(small(complete_graph(6)), small(chimera(1))).has_value());
    EXPECT_FALSE(find_embedding(complete_graph(6), chimera(1)).has_value());
}

TEST(FindEmbedding, AgreesWithExhaustiveSearchOnSmallGraphs) {
    SplitMix64 rng(17);
    const HardwareGraph cell = chimera(1);
    for (int t = 0; t < 12; ++t) {
        const HardwareGraph s = random_graph(rng, static_cast<int>(rng.uniform_int(3, 6)), 0.7);
        const auto best = oracle::min_minor_size(small(s), small(cell));
        EmbedParams params;
        params.seed = rng.next();
        const auto e = find_embedding(s, cell, params);
        EXPECT_EQ(e.has_value(), best.has_value()) << "case " << t;
        if (e) {
            EXPECT_TRUE(is_minor_embedding(*e, s, cell));
            EXPECT_GE(static_cast<int>(e->total_size()), *best);
        }
    }
}

TEST(FindEmbedding, ReturnedEmbeddingsAreValid) {
    SplitMix64 rng(23);
    for (int t = 0; t < 10; ++t) {
        const HardwareGraph s = random_graph(rng, static_cast<int>(rng.uniform_int(6, 16)), 0.4);
        const HardwareGraph target = t % 2 ? pegasus(3) : chimera(4);
        EmbedParams params;
        params.seed = rng.next();
        const auto e = find_embedding(s, target, params);
        ASSERT_TRUE(e.has_value()) << "case " << t;
        EXPECT_TRUE(validate(*e, s, target).valid);
        EXPECT_TRUE(is_minor_embedding(*e, s, target));
        for (const auto& chain : e->chains) EXPECT_TRUE(std::is_sorted(chain.begin(), chain.end()));
        const double r = embedding_ratio(*e, s, target);
        EXPECT_GE(r, 1.0);
        const bool singletons =
            std::all_of(e->chains.begin(), e->chains.end(), [](const auto& c) { return c.size() == 1; });
        EXPECT_EQ(r == 1.0, singletons);
    }
}

TEST(FindEmbedding, CompleteGraphsIntoChimera) {
    for (int n : {8, 12, 16}) {
        const auto e = find_embedding(complete_graph(n), chimera(n / 4 + 1));
        ASSERT_TRUE(e.has_value()) << "K" << n;
        EXPECT_TRUE(is_minor_embedding(*e, complete_graph(n), chimera(n / 4 + 1)));
    }
}

TEST(FindEmbedding, DeterministicAcrossRunsAndThreadCounts) {
    SplitMix64 rng(31);
    const HardwareGraph s = random_graph(rng, 14, 0.45);
    const HardwareGraph target = chimera(4);
    EmbedParams params;
    params.seed = 99;
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const auto one = find_embedding(s, target, params);
    omp_set_num_threads(3);
    const auto three = find_embedding(s, target, params);
    omp_set_num_threads(saved);
    ASSERT_TRUE(one.has_value());
    EXPECT_EQ(one, three);
    EXPECT_EQ(one, find_embedding(s, target, params));
}

TEST(FindEmbedding, LowestSuccessfulTryWins) {
    SplitMix64 rng(41);
    const HardwareGraph s = random_graph(rng, 18, 0.5);
    const HardwareGraph target = chimera(4);
    EmbedParams params;
    params.seed = 5;
    params.max_tries = 6;
    std::optional<Embedding> first;
    for (int t = 0; t < params.max_tries && !first; ++t) first = embedding_try(s, target, params, t);
    EXPECT_EQ(find_embedding(s, target, params), first);
}

TEST(FindEmbedding, TooLargeSourceFails) {
    EXPECT_FALSE(find_embedding(complete_graph(3), path_graph(2)).has_value());
    EXPECT_THROW(find_embedding(HardwareGraph(0, {}), chimera(1)), DomainError);
    EmbedParams none;
    none.max_tries = 0;
    EXPECT_THROW(find_embedding(complete_graph(3), chimera(1), none), DomainError);
}

TEST(Validate, ReportsEveryViolation) {
    const HardwareGraph s = complete_graph(3);
    const HardwareGraph t = cycle_graph(6);
    const Embedding good{{{0, 1}, {2, 3}, {4, 5}}};
    EXPECT_TRUE(validate(good, s, t).valid);
    EXPECT_FALSE(validate(Embedding{{{0, 1}, {1, 2}, {4, 5}}}, s, t).valid);  // overlap
    EXPECT_FALSE(validate(Embedding{{{0, 2}, {3}, {4, 5}}}, s, t).valid);     // disconnected chain
    EXPECT_FALSE(validate(Embedding{{{0}, {2}, {4}}}, s, t).valid);           // no edges realised
    EXPECT_FALSE(validate(Embedding{{{0, 1}, {}, {4, 5}}}, s, t).valid);      // empty chain
    EXPECT_FALSE(validate(Embedding{{{0, 1}, {2, 3}}}, s, t).valid);          // missing chain
    EXPECT_FALSE(validate(Embedding{{{0, 1}, {2, 3}, {4, 9}}}, s, t).valid);  // out of range
    const EmbeddingCheck many = validate(Embedding{{{0}, {2}, {4}}}, s, t);
    EXPECT_EQ(many.violations.size(), 3U);
    EXPECT_THROW(embedding_ratio(Embedding{{{0}, {2}, {4}}}, s, t), DomainError);
    EXPECT_EQ(embedding_ratio(good, s, t), 2.0);
}

TEST(SizeSearch, CompleteFourFitsOneCell) {
    const SizeSearchResult r = min_embeddable_size(complete_graph(4), GraphFamily::Chimera);
    EXPECT_EQ(r.L, 1);
    EXPECT_TRUE(validate(r.embedding, complete_graph(4), r.target).valid);
}

TEST(SizeSearch, CompleteFiveMatchesExhaustiveAnswer) {
    const bool fits_one_cell = oracle::min_minor_size(small(complete_graph(5)), small(chimera(1))).has_value();
    const SizeSearchResult r = min_embeddable_size(complete_graph(5), GraphFamily::Chimera);
    ASSERT_TRUE(r.L.has_value());
    EXPECT_EQ(*r.L == 1, fits_one_cell);
}

TEST(SizeSearch, PathOfTenIsMonotone) {
    const HardwareGraph p10 = path_graph(10);
    const SizeSearchResult r = min_embeddable_size(p10, GraphFamily::Chimera);
    ASSERT_TRUE(r.L.has_value());
    EXPECT_EQ(*r.L == 1, find_embedding(p10, chimera(1)).has_value());
    EXPECT_EQ(r.L, 2);
    EXPECT_NE(std::find(r.attempts.begin(), r.attempts.end(), std::pair{1, false}), r.attempts.end());
}

TEST(SizeSearch, WarmStartsShrinkAndGrow) {
    SplitMix64 rng(3);
    const HardwareGraph s = random_graph(rng, 20, 0.5);
    for (int warm : {1, 3, 8}) {
        SizeSearchOptions options;
        options.warm_start = warm;
        const SizeSearchResult r = min_embeddable_size(s, GraphFamily::Chimera, {}, options);
        ASSERT_TRUE(r.L.has_value());
        EXPECT_EQ(r.attempts.front().first, warm);
        EXPECT_TRUE(validate(r.embedding, s, r.target).valid);
        if (*r.L > 1) {
            EXPECT_NE(std::find(r.attempts.begin(), r.attempts.end(), std::pair{*r.L - 1, false}), r.attempts.end());
        }
        for (const auto& [L, ok] : r.attempts)
            if (ok) { EXPECT_GE(L, *r.L); }
    }
}

TEST(SizeSearch, CeilingIsReported) {
    SizeSearchOptions options;
    options.ceiling = 1;
    const SizeSearchResult r = min_embeddable_size(complete_graph(9), GraphFamily::Chimera, {}, options);
    EXPECT_FALSE(r.L.has_value());
    EXPECT_EQ(r.attempts, (std::vector<std::pair<int, bool>>{{1, false}}));
    options.ceiling = 1;
    EXPECT_THROW(min_embeddable_size(complete_graph(3), GraphFamily::Pegasus, {}, options), DomainError);
    EXPECT_EQ(family_min_size(GraphFamily::Pegasus), 2);
    EXPECT_THROW(make_target(GraphFamily::Arbitrary, 2), DomainError);
}

}  // namespace
}  // namespace dwall
