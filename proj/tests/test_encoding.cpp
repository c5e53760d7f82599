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

#include <map>
#include <set>

#include "dwall/encoding.hpp"
#include "dwall/errors.hpp"
#include "dwall/problems.hpp"
#include "dwall/rng.hpp"
#include "oracles.hpp"

namespace dwall {
namespace {

std::map<int, double> terms_of(const LinearForm& f) {
    std::map<int, double> out;
    for (const auto& [q, c] : f.terms) out[q] += c;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0.0; });
    return out;
}

// Codeword of value k on the qubits of v inside a model of n qubits, other
// qubits left at +1.
SpinAssignment word(const VariableHandle& v, int k, SpinAssignment s) {
    const auto w = v.kind == EncodingKind::DomainWall ? oracle::dw_word(v.m, k) : oracle::one_hot_word(v.m, k);
    for (int q = 0; q < v.num_qubits(); ++q) s[static_cast<std::size_t>(v.first_qubit + q)] = w[static_cast<std::size_t>(q)];
    return s;
}

SpinAssignment pair_word(const EncodedProblem& p, int a, int b) {
    SpinAssignment s(static_cast<std::size_t>(p.model.num_qubits()), 1);
    return word(p.variables[1], b, word(p.variables[0], a, s));
}

std::set<std::string> ground_bits(const IsingModel& m) {
    std::set<std::string> out;
    for (std::uint64_t i : oracle::ground(m).indices) out.insert(oracle::bits(i, m.num_qubits()));
    return out;
}

TEST(DomainWallCore, FiveValueCoefficientsAndGroundStates) {
    EncodedProblem p;
    const VariableHandle v = add_domain_wall_variable(p, 5, 1.0);
    EXPECT_EQ(v.num_qubits(), 4);
    EXPECT_EQ(p.model.fields(), (std::vector<double>{1.0, 0.0, 0.0, -1.0}));
    const std::map<QubitPair, double> j{{{0, 1}, -1.0}, {{1, 2}, -1.0}, {{2, 3}, -1.0}};
    EXPECT_EQ(p.model.couplers(), j);
    EXPECT_EQ(ground_bits(p.model), (std::set<std::string>{"0000", "1000", "1100", "1110", "1111"}));
}

TEST(DomainWallCore, TwoValuesIsAPlainQubit) {
    EncodedProblem p;
    const VariableHandle v = add_domain_wall_variable(p, 2, 1.0);
    EXPECT_EQ(v.num_qubits(), 1);
    EXPECT_EQ(p.model.num_couplers(), 0U);
    EXPECT_EQ(p.model.field(0), 0.0);
    EXPECT_EQ(decode(v, spins_from_bits("0")), 0);
    EXPECT_EQ(decode(v, spins_from_bits("1")), 1);
}

TEST(DomainWallCore, ThreeValuesDegenerateWithGapEight) {
    EncodedProblem p;
    add_domain_wall_variable(p, 3, 2.0);
    const oracle::Ground g = oracle::ground(p.model);
    EXPECT_EQ(g.indices.size(), 3U);
    EXPECT_EQ(g.gap, 8.0);
    EXPECT_EQ(ground_bits(p.model), (std::set<std::string>{"00", "10", "11"}));
}

TEST(DomainWallCore, ExactlyMGroundStatesForAllSizes) {
    for (int m = 2; m <= 10; ++m) {
        EncodedProblem p;
        add_domain_wall_variable(p, m, 1.5);
        const oracle::Ground g = oracle::ground(p.model);
        ASSERT_EQ(g.indices.size(), static_cast<std::size_t>(m)) << "m=" << m;
        for (int k = 0; k < m; ++k)
            EXPECT_NEAR(oracle::energy(p.model, oracle::dw_word(m, k)), g.energy, 1e-12);
        // the cheapest invalid state carries two extra walls of 2 lambda each
        if (m > 2) {
            EXPECT_NEAR(g.gap, 4 * 1.5, 1e-12);
        }
    }
}

TEST(OneHotCore, FourValues) {
    EncodedProblem p;
    add_one_hot_variable(p, 4, 1.0);
    EXPECT_EQ(p.model.num_couplers(), 6U);
    for (const auto& [key, j] : p.model.couplers()) EXPECT_EQ(j, 1.0);
    EXPECT_EQ(p.model.fields(), (std::vector<double>(4, -2.0)));
    const oracle::Ground g = oracle::ground(p.model);
    EXPECT_EQ(g.energy, -4.0);
    EXPECT_EQ(g.gap, 2.0);
    EXPECT_EQ(ground_bits(p.model), (std::set<std::string>{"1000", "0100", "0010", "0001"}));
}

TEST(OneHotCore, SmallSizes) {
    EncodedProblem p2;
    add_one_hot_variable(p2, 2, 1.0);
    EXPECT_EQ(p2.model.coupler(0, 1), 1.0);
    EXPECT_EQ(p2.model.num_fields(), 0U);
    EXPECT_EQ(ground_bits(p2.model), (std::set<std::string>{"01", "10"}));
    EncodedProblem p3;
    add_one_hot_variable(p3, 3, 1.0);
    EXPECT_EQ(ground_bits(p3.model), (std::set<std::string>{"100", "010", "001"}));
}

TEST(OneHotCore, ExactlyMGroundStatesForAllSizes) {
    for (int m = 2; m <= 10; ++m) {
        EncodedProblem p;
        add_one_hot_variable(p, m, 1.0);
        const oracle::Ground g = oracle::ground(p.model);
        EXPECT_EQ(g.indices.size(), static_cast<std::size_t>(m)) << "m=" << m;
        for (std::uint64_t i : g.indices) EXPECT_EQ(std::popcount(i), 1);
    }
}

TEST(Variables, QubitCountsAndErrors) {
    EncodedProblem p;
    EXPECT_EQ(add_variable(p, EncodingKind::DomainWall, 7, 1.0).num_qubits(), 6);
    const VariableHandle v = add_variable(p, EncodingKind::OneHot, 7, 1.0);
    EXPECT_EQ(v.num_qubits(), 7);
    EXPECT_EQ(v.first_qubit, 6);
    EXPECT_EQ(p.model.num_qubits(), 13);
    EXPECT_THROW(add_domain_wall_variable(p, 1, 1.0), DomainError);
    EXPECT_THROW(add_one_hot_variable(p, 3, 0.0), DomainError);
    EXPECT_EQ(parse_encoding("one-hot"), EncodingKind::OneHot);
    EXPECT_THROW(parse_encoding("binary"), ParseError);
}

TEST(DeltaExpansion, Examples) {
    EncodedProblem p;
    const VariableHandle dw = add_domain_wall_variable(p, 5, 1.0);
    const LinearForm d2 = delta_expansion(dw, 2);
    EXPECT_EQ(terms_of(d2), (std::map<int, double>{{1, -0.5}, {2, 0.5}}));
    EXPECT_EQ(d2.offset, 0.0);
    const LinearForm d0 = delta_expansion(dw, 0);
    EXPECT_EQ(terms_of(d0), (std::map<int, double>{{0, 0.5}}));
    EXPECT_EQ(d0.offset, 0.5);

    EncodedProblem q;
    const VariableHandle oh = add_one_hot_variable(q, 4, 1.0);
    const LinearForm d1 = delta_expansion(oh, 1);
    EXPECT_EQ(terms_of(d1), (std::map<int, double>{{1, -0.5}}));
    EXPECT_EQ(d1.offset, 0.5);
    EXPECT_THROW(delta_expansion(oh, 4), DomainError);
}

TEST(DeltaExpansion, IsTheValueIndicatorOnValidStates) {
    for (EncodingKind kind : {EncodingKind::DomainWall, EncodingKind::OneHot})
        for (int m = 2; m <= 6; ++m) {
            EncodedProblem p;
            const VariableHandle v = add_variable(p, kind, m, 1.0);
            for (int i = 0; i < m; ++i) {
                const LinearForm f = delta_expansion(v, i);
                for (int k = 0; k < m; ++k) {
                    const SpinAssignment s = word(v, k, SpinAssignment(static_cast<std::size_t>(v.num_qubits()), 1));
                    double x = f.offset;
                    for (const auto& [q, c] : f.terms) x += c * s[static_cast<std::size_t>(q)];
                    EXPECT_EQ(x, i == k ? 1.0 : 0.0);
                }
            }
        }
}

TEST(ValuePenalty, DomainWallMiddleValue) {
    EncodedProblem p;
    const VariableHandle v = add_domain_wall_variable(p, 3, 1.0);
    const IsingModel before = p.model;
    add_value_penalty(p, v, 1, 2.0);
    std::vector<double> diff;
    for (int k = 0; k < 3; ++k)
        diff.push_back(oracle::energy(p.model, oracle::dw_word(3, k)) - oracle::energy(before, oracle::dw_word(3, k)));
    EXPECT_EQ(diff, (std::vector<double>{0.0, 2.0, 0.0}));
}

TEST(ValuePenalty, ZeroWeightLeavesModel) {
    EncodedProblem p;
    const VariableHandle v = add_domain_wall_variable(p, 4, 1.0);
    const IsingModel before = p.model;
    add_value_penalty(p, v, 2, 0.0);
    EXPECT_EQ(p.model, before);
}

TEST(ValuePenalty, OneHotRaisesOnlyTheChosenValue) {
    EncodedProblem p;
    const VariableHandle v = add_one_hot_variable(p, 3, 1.0);
    const IsingModel before = p.model;
    add_value_penalty(p, v, 0, 5.0);
    for (int k = 0; k < 3; ++k)
        EXPECT_EQ(oracle::energy(p.model, oracle::one_hot_word(3, k)) - oracle::energy(before, oracle::one_hot_word(3, k)),
                  k == 0 ? 5.0 : 0.0);
}

TEST(Interaction, TwoBinaryIdentity) {
    EncodedProblem p;
    const VariableHandle a = add_domain_wall_variable(p, 2, 1.0);
    const VariableHandle b = add_domain_wall_variable(p, 2, 1.0);
    const IsingModel t = interaction_terms(a, b, ValueMatrix::identity(2));
    EXPECT_EQ(t.couplers(), (std::map<QubitPair, double>{{{0, 1}, 0.5}}));
    EXPECT_EQ(t.num_fields(), 0U);
    EXPECT_EQ(t.offset(), 0.5);
    for (std::uint64_t i = 0; i < 4; ++i) {
        const auto s = oracle::spins_of(i, 2);
        EXPECT_EQ(oracle::energy(t, s), s[0] == s[1] ? 1.0 : 0.0);
    }
}

TEST(Interaction, ThreeValueIdentityUsesFourCouplers) {
    EncodedProblem p;
    const VariableHandle a = add_domain_wall_variable(p, 3, 1.0);
    const VariableHandle b = add_domain_wall_variable(p, 3, 1.0);
    const IsingModel t = interaction_terms(a, b, ValueMatrix::identity(3));
    const std::map<QubitPair, double> expected{{{0, 2}, 0.5}, {{1, 3}, 0.5}, {{0, 3}, -0.25}, {{1, 2}, -0.25}};
    EXPECT_EQ(t.couplers(), expected);
    EXPECT_EQ(t.num_couplers(), 3U * 3U - 5U);
}

TEST(Interaction, ZeroTableAddsNothing) {
    EncodedProblem p;
    const VariableHandle a = add_domain_wall_variable(p, 4, 1.0);
    const VariableHandle b = add_one_hot_variable(p, 3, 1.0);
    const IsingModel before = p.model;
    add_interaction(p, a, b, ValueMatrix(4, 3));
    EXPECT_EQ(p.model, before);
}

TEST(Interaction, RandomTablesAreReproducedExactly) {
    SplitMix64 rng(2024);
    for (int t = 0; t < 200; ++t) {
        const EncodingKind kind = t % 2 ? EncodingKind::OneHot : EncodingKind::DomainWall;
        const int mk = static_cast<int>(rng.uniform_int(2, 5));
        const int ml = static_cast<int>(rng.uniform_int(2, 5));
        EncodedProblem p;
        const VariableHandle a = add_variable(p, kind, mk, 1.0);
        const VariableHandle b = add_variable(p, kind, ml, 1.0);
        ValueMatrix e(mk, ml);
        for (int i = 0; i < mk; ++i)
            for (int j = 0; j < ml; ++j) e(i, j) = 10.0 * rng.uniform() - 5.0;
        const IsingModel terms = interaction_terms(a, b, e);
        for (int i = 0; i < mk; ++i)
            for (int j = 0; j < ml; ++j) EXPECT_NEAR(oracle::energy(terms, pair_word(p, i, j)), e(i, j), 1e-9);

        // Inside a full problem the valid-pair energies differ from E by the
        // constant core ground energy.
        const IsingModel cores = p.model;
        add_interaction(p, a, b, e);
        const double base = oracle::energy(cores, pair_word(p, 0, 0));
        for (int i = 0; i < mk; ++i)
            for (int j = 0; j < ml; ++j)
                EXPECT_NEAR(oracle::energy(p.model, pair_word(p, i, j)) - base, e(i, j), 1e-9);
    }
}

TEST(Interaction, RejectsAliasingAndShapeMismatch) {
    EncodedProblem p;
    const VariableHandle a = add_domain_wall_variable(p, 3, 1.0);
    const VariableHandle b = add_domain_wall_variable(p, 4, 1.0);
    EXPECT_THROW(add_interaction(p, a, a, ValueMatrix::identity(3)), AliasingError);
    EXPECT_THROW(add_interaction(p, a, b, ValueMatrix::identity(3)), DomainError);
}

TEST(InteractionCouplers, ColoringEdgeCounts) {
    for (int n = 3; n <= 8; ++n) {
        ColoringInstance inst{2, {{0, 1}}, n};
        for (EncodingKind kind : {EncodingKind::DomainWall, EncodingKind::OneHot}) {
            const EncodedProblem p = build_coloring(inst, kind);
            const VariableHandle& a = p.variables[0];
            int inter = 0, core_a = 0, core_b = 0;
            for (const auto& [key, j] : p.model.couplers()) {
                const bool first_a = key.first < a.end_qubit();
                const bool second_a = key.second < a.end_qubit();
                if (first_a != second_a)
                    ++inter;
                else if (first_a)
                    ++core_a;
                else
                    ++core_b;
            }
            if (kind == EncodingKind::DomainWall) {
                EXPECT_EQ(inter, 3 * n - 5) << "n=" << n;
                EXPECT_EQ(core_a, n - 2);
                EXPECT_EQ(core_b, n - 2);
            } else {
                EXPECT_EQ(inter, n) << "n=" << n;
                EXPECT_EQ(core_a, n * (n - 1) / 2);
                EXPECT_EQ(core_b, n * (n - 1) / 2);
            }
        }
    }
}

TEST(Decode, Examples) {
    EncodedProblem p;
    const VariableHandle dw = add_domain_wall_variable(p, 5, 1.0);
    EXPECT_EQ(decode(dw, spins_from_bits("1100")), 2);
    EXPECT_EQ(decode(dw, spins_from_bits("1010")), std::nullopt);
    EXPECT_FALSE(is_valid(dw, spins_from_bits("0100")));
    EncodedProblem q;
    const VariableHandle oh = add_one_hot_variable(q, 4, 1.0);
    EXPECT_EQ(decode(oh, spins_from_bits("0100")), 1);
    EXPECT_EQ(decode(oh, spins_from_bits("0110")), std::nullopt);
    EXPECT_EQ(decode(oh, spins_from_bits("0000")), std::nullopt);
    EXPECT_THROW(decode(oh, spins_from_bits("010")), DimensionError);
}

TEST(Decode, EncodeValuesRoundTrip) {
    EncodedProblem p;
    add_domain_wall_variable(p, 4, 1.0);
    add_one_hot_variable(p, 3, 1.0);
    add_domain_wall_variable(p, 2, 1.0);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 2; ++c) {
                const std::vector<int> values{a, b, c};
                EXPECT_EQ(decode_all(p, encode_values(p, values)), values);
            }
}

std::map<std::pair<int, int>, double> order_penalties(int m) {
    EncodedProblem p;
    const VariableHandle a = add_domain_wall_variable(p, m, 1.0);
    const VariableHandle b = add_domain_wall_variable(p, m, 1.0);
    const IsingModel before = p.model;
    add_order_constraint(p, a, b, 1.0);
    std::map<std::pair<int, int>, double> out;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            out[{i, j}] = oracle::energy(p.model, pair_word(p, i, j)) - oracle::energy(before, pair_word(p, i, j));
    return out;
}

TEST(OrderConstraint, ZeroExactlyOnIncreasingPairs) {
    for (int m = 2; m <= 6; ++m) {
        std::set<std::pair<int, int>> zero;
        for (const auto& [pair, penalty] : order_penalties(m)) {
            if (std::abs(penalty) <= 1e-12)
                zero.insert(pair);
            else
                EXPECT_GE(penalty, 1.0 - 1e-12) << "m=" << m;
        }
        std::set<std::pair<int, int>> expected;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) expected.emplace(i, j);
        EXPECT_EQ(zero, expected) << "m=" << m;
    }
    EXPECT_GE(order_penalties(3).at({2, 0}), 1.0);
}

TEST(OrderConstraint, RejectsMismatchedVariables) {
    EncodedProblem p;
    const VariableHandle a = add_domain_wall_variable(p, 3, 1.0);
    const VariableHandle b = add_domain_wall_variable(p, 4, 1.0);
    const VariableHandle c = add_one_hot_variable(p, 3, 1.0);
    EXPECT_THROW(add_order_constraint(p, a, b, 1.0), DomainError);
    EXPECT_THROW(add_order_constraint(p, a, c, 1.0), DomainError);
    EXPECT_THROW(add_order_constraint(p, a, a, 1.0), AliasingError);
}

TEST(KHot, GroundStatesAreIncreasingTuples) {
    const EncodedProblem p = build_k_hot_ensemble(2, 4, 1.0, 1.0);
    const oracle::Ground g = oracle::ground(p.model);
    ASSERT_EQ(g.indices.size(), 6U);
    std::set<std::vector<int>> tuples;
    for (std::uint64_t i : g.indices) {
        const auto x = decode_all(p, oracle::spins_of(i, p.model.num_qubits()));
        ASSERT_TRUE(x.has_value());
        EXPECT_LT((*x)[0], (*x)[1]);
        tuples.insert(*x);
    }
    EXPECT_EQ(tuples.size(), 6U);
}

TEST(KHot, EdgeCases) {
    EXPECT_EQ(oracle::ground(build_k_hot_ensemble(1, 3, 1.0, 1.0).model).indices.size(), 3U);
    const EncodedProblem p = build_k_hot_ensemble(3, 3, 1.0, 1.0);
    const oracle::Ground g = oracle::ground(p.model);
    ASSERT_EQ(g.indices.size(), 1U);
    EXPECT_EQ(decode_all(p, oracle::spins_of(g.indices[0], p.model.num_qubits())), (std::vector<int>{0, 1, 2}));
    EXPECT_THROW(build_k_hot_ensemble(4, 3, 1.0, 1.0), InfeasibleError);
}

TEST(Lambda, RecommendationAndWarnings) {
    EncodedProblem p;
    const VariableHandle a = add_domain_wall_variable(p, 3, 1.0);
    const VariableHandle b = add_domain_wall_variable(p, 3, 5.0);
    ValueMatrix e(3, 3);
    e(0, 2) = -2.5;
    e(1, 1) = 1.0;
    add_interaction(p, a, b, e);
    EXPECT_EQ(recommended_lambda(p, a), 3.5);
    EXPECT_EQ(recommended_lambda(p, b), 3.5);
    const auto warnings = lambda_warnings(p);
    ASSERT_EQ(warnings.size(), 1U);
    EXPECT_NE(warnings[0].find("variable 0"), std::string::npos);
}

TEST(Metrics, TableRows) {
    const EncodingMetrics dw = encoding_metrics(MetricKind::DomainWall, 7);
    EXPECT_EQ(dw.qubits, 6);
    EXPECT_EQ(dw.core_couplers, 5);
    EXPECT_EQ(dw.intra_connectivity, "linear");
    const EncodingMetrics oh = encoding_metrics(MetricKind::OneHot, 4);
    EXPECT_EQ(oh.qubits, 4);
    EXPECT_EQ(oh.core_couplers, 6);
    EXPECT_EQ(oh.intra_connectivity, "complete");
    const EncodingMetrics bin = encoding_metrics(MetricKind::BinaryQubitCountOnly, 5);
    EXPECT_EQ(bin.qubits, 3);
    EXPECT_FALSE(bin.core_couplers.has_value());
    EXPECT_FALSE(bin.intra_connectivity.has_value());
}

}  // namespace
}  // namespace dwall
