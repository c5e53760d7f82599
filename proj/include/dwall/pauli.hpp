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
#include <map>
#include <string>
#include <vector>

namespace dwall {

enum class Pauli : char { X = 'X', Z = 'Z' };

/// coefficient * prod_q P_q with at most one factor per qubit. Empty factors
/// is the identity. Only X and Z appear, so every term is real in the
/// computational basis.
struct PauliTerm {
    double coefficient = 0.0;
    std::map<int, Pauli> factors;

    /// Bit q set iff the factor on q is X.
    std::uint64_t x_mask() const;
    std::uint64_t z_mask() const;
    /// e.g. "-1*X0 Z1"; "3*I" for the identity.
    std::string to_string() const;

    bool operator==(const PauliTerm&) const = default;
};

struct PauliOperatorSum {
    int n_qubits = 0;
    std::vector<PauliTerm> terms;

    /// Adds a term, combining with an existing term on the same factors and
    /// dropping it if the coefficient cancels to zero.
    void add(const PauliTerm& term);
};

/// Row-major dim x dim real matrix in the computational basis (qubit 0 is the
/// least significant bit of the row/column index).
struct DenseOperator {
    int n_qubits = 0;
    std::size_t dim = 0;
    std::vector<double> data;

    explicit DenseOperator(int n = 0);

    double& operator()(std::size_t r, std::size_t c) { return data[r * dim + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data[r * dim + c]; }

    DenseOperator operator+(const DenseOperator& o) const;
    DenseOperator operator-(const DenseOperator& o) const;
    double max_abs() const;
};

inline constexpr int kMaxDenseQubits = 14;

/// Column-parallel build. Throws SizeError above kMaxDenseQubits.
DenseOperator to_dense(const PauliOperatorSum& op);
DenseOperator to_dense(const PauliTerm& term, int n_qubits);

/// Row-parallel product.
DenseOperator multiply(const DenseOperator& a, const DenseOperator& b);
/// AB - BA.
DenseOperator commutator(const DenseOperator& a, const DenseOperator& b);

/// Symbolic check: two Pauli strings commute iff they anticommute on an even
/// number of qubits.
bool terms_commute(const PauliTerm& a, const PauliTerm& b);

namespace serial {

DenseOperator to_dense(const PauliOperatorSum& op);
DenseOperator multiply(const DenseOperator& a, const DenseOperator& b);

}  // namespace serial

}  // namespace dwall
