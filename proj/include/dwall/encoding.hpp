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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dwall/ising.hpp"

namespace dwall {

enum class EncodingKind { DomainWall, OneHot };

std::string_view to_string(EncodingKind kind);
/// Accepts "dw" / "domainwall" / "onehot" / "one-hot".
EncodingKind parse_encoding(std::string_view text);

/// A discrete variable taking values 0..m-1, living on the contiguous qubit
/// range [first_qubit, first_qubit + num_qubits()) of its host model.
///
/// Domain wall uses m-1 qubits: value k is the state 1^k 0^(m-1-k) with
/// virtual end spins fixed to -1 (left) and +1 (right). One hot uses m qubits
/// with exactly one bit set.
struct VariableHandle {
    int id = 0;
    EncodingKind kind = EncodingKind::DomainWall;
    int m = 2;
    int first_qubit = 0;
    double lambda = 1.0;

    int num_qubits() const { return kind == EncodingKind::DomainWall ? m - 1 : m; }
    int end_qubit() const { return first_qubit + num_qubits(); }

    bool operator==(const VariableHandle&) const = default;
};

/// Dense m_k x m_l energy table E[i][j] for value pairs (i, j).
class ValueMatrix {
public:
    ValueMatrix() = default;
    ValueMatrix(int rows, int cols, double fill = 0.0);

    static ValueMatrix identity(int m, double scale = 1.0);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
    double max_abs() const;
    bool is_zero() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

/// An Ising model plus the variables encoded into it. Qubit ranges of the
/// variables are disjoint and cover the model.
struct EncodedProblem {
    IsingModel model;
    std::vector<VariableHandle> variables;
    /// Accumulated max|E| over every interaction touching each variable; used
    /// for the core-strength recommendation.
    std::vector<double> interaction_load;
};

/// Affine expression offset + sum_k coeff_k Z_{qubit_k}.
struct LinearForm {
    std::vector<std::pair<int, double>> terms;
    double offset = 0.0;
};

VariableHandle add_domain_wall_variable(EncodedProblem& p, int m, double lambda);
VariableHandle add_one_hot_variable(EncodedProblem& p, int m, double lambda);
VariableHandle add_variable(EncodedProblem& p, EncodingKind kind, int m, double lambda);

/// Expansion of the value indicator for `value`: evaluates to 1 on valid
/// states holding that value and 0 on other valid states.
LinearForm delta_expansion(const VariableHandle& v, int value);

/// Adds w * indicator(value) to the model.
void add_value_penalty(EncodedProblem& p, const VariableHandle& v, int value, double weight);

/// Two-body terms realising sum_ij E_ij delta_i^k delta_j^l exactly on valid
/// states (offset included). Returned as a standalone model over the host's
/// qubit indices so callers can inspect what would be emitted.
IsingModel interaction_terms(const VariableHandle& vk, const VariableHandle& vl, const ValueMatrix& e);

void add_interaction(EncodedProblem& p, const VariableHandle& vk, const VariableHandle& vl, const ValueMatrix& e);

/// Value held by `v` in `s`, or nullopt if the qubits are not a valid codeword.
std::optional<int> decode(const VariableHandle& v, std::span<const std::int8_t> s);
bool is_valid(const VariableHandle& v, std::span<const std::int8_t> s);

/// Decodes every variable; nullopt if any is invalid.
std::optional<std::vector<int>> decode_all(const EncodedProblem& p, std::span<const std::int8_t> s);

/// Spins encoding the given logical values (one per variable, in order).
SpinAssignment encode_values(const EncodedProblem& p, std::span<const int> values);

/// Penalises value(vj) >= value(vj1) by at least `strength`; zero iff
/// value(vj) < value(vj1). Both must be domain-wall variables of equal size.
void add_order_constraint(EncodedProblem& p, const VariableHandle& vj, const VariableHandle& vj1, double strength);

/// k domain-wall Z_m variables whose ground states are the strictly increasing
/// k-tuples of values.
EncodedProblem build_k_hot_ensemble(int k, int m, double lambda, double order_strength);

/// Recommended core strength: 1 + sum over interactions of max|E|.
double recommended_lambda(const EncodedProblem& p, const VariableHandle& v);

/// One message per variable whose core strength is below the recommendation.
/// Weak cores are allowed; callers decide whether to surface this.
std::vector<std::string> lambda_warnings(const EncodedProblem& p);

enum class MetricKind { DomainWall, OneHot, BinaryQubitCountOnly };

struct EncodingMetrics {
    int qubits = 0;
    /// nullopt where the encoding has no two-body construction here.
    std::optional<int> core_couplers;
    std::optional<std::string> intra_connectivity;
};

EncodingMetrics encoding_metrics(MetricKind kind, int m);

}  // namespace dwall
