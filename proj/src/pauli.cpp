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

#include "dwall/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "dwall/errors.hpp"

namespace dwall {

std::uint64_t PauliTerm::x_mask() const {
    std::uint64_t m = 0;
    for (const auto& [q, p] : factors)
        if (p == Pauli::X) m |= std::uint64_t{1} << q;
    return m;
}

std::uint64_t PauliTerm::z_mask() const {
    std::uint64_t m = 0;
    for (const auto& [q, p] : factors)
        if (p == Pauli::Z) m |= std::uint64_t{1} << q;
    return m;
}

std::string PauliTerm::to_string() const {
    std::ostringstream out;
    out << coefficient << '*';
    if (factors.empty()) out << 'I';
    bool first = true;
    for (const auto& [q, p] : factors) {
        if (!first) out << ' ';
        out << static_cast<char>(p) << q;
        first = false;
    }
    return out.str();
}

void PauliOperatorSum::add(const PauliTerm& term) {
    for (const auto& [q, p] : term.factors)
        if (q < 0 || q >= n_qubits) throw MappingError("Pauli factor on qubit " + std::to_string(q) + " out of range");
    if (term.coefficient == 0.0) return;
    auto it = std::find_if(terms.begin(), terms.end(), [&](const PauliTerm& t) { return t.factors == term.factors; });
    if (it == terms.end()) {
        terms.push_back(term);
        return;
    }
    it->coefficient += term.coefficient;
    if (it->coefficient == 0.0) terms.erase(it);
}

DenseOperator::DenseOperator(int n) : n_qubits(n) {
    if (n < 0 || n > kMaxDenseQubits)
        throw SizeError("dense operator on " + std::to_string(n) + " qubits exceeds cap of " +
                        std::to_string(kMaxDenseQubits));
    dim = std::size_t{1} << n;
    data.assign(dim * dim, 0.0);
}

DenseOperator DenseOperator::operator+(const DenseOperator& o) const {
    if (o.dim != dim) throw DimensionError("operator sizes differ");
    DenseOperator out = *this;
    for (std::size_t k = 0; k < data.size(); ++k) out.data[k] += o.data[k];
    return out;
}

DenseOperator DenseOperator::operator-(const DenseOperator& o) const {
    if (o.dim != dim) throw DimensionError("operator sizes differ");
    DenseOperator out = *this;
    for (std::size_t k = 0; k < data.size(); ++k) out.data[k] -= o.data[k];
    return out;
}

double DenseOperator::max_abs() const {
    double m = 0.0;
    for (double v : data) m = std::max(m, std::abs(v));
    return m;
}

namespace {

/// <col ^ x | P | col> = coefficient * (-1)^popcount(col & z) for basis column col.
inline double column_element(const PauliTerm& t, std::uint64_t z, std::size_t col) {
    return (std::popcount(static_cast<std::uint64_t>(col) & z) & 1) ? -t.coefficient : t.coefficient;
}

}  // namespace

DenseOperator to_dense(const PauliOperatorSum& op) {
    DenseOperator out(op.n_qubits);
    std::vector<std::uint64_t> xs, zs;
    for (const auto& t : op.terms) {
        xs.push_back(t.x_mask());
        zs.push_back(t.z_mask());
    }
    const auto dim = static_cast<std::int64_t>(out.dim);
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < dim; ++c) {
        const auto col = static_cast<std::size_t>(c);
        for (std::size_t k = 0; k < op.terms.size(); ++k)
            out(col ^ xs[k], col) += column_element(op.terms[k], zs[k], col);
    }
    return out;
}

DenseOperator to_dense(const PauliTerm& term, int n_qubits) {
    PauliOperatorSum op{n_qubits, {}};
    op.add(term);
    return to_dense(op);
}

DenseOperator multiply(const DenseOperator& a, const DenseOperator& b) {
    if (a.dim != b.dim) throw DimensionError("operator sizes differ");
    DenseOperator out(a.n_qubits);
    const auto dim = static_cast<std::int64_t>(a.dim);
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < dim; ++r) {
        const auto row = static_cast<std::size_t>(r);
        for (std::size_t k = 0; k < a.dim; ++k) {
            const double ark = a(row, k);
            if (ark == 0.0) continue;
            for (std::size_t c = 0; c < a.dim; ++c) out(row, c) += ark * b(k, c);
        }
    }
    return out;
}

DenseOperator commutator(const DenseOperator& a, const DenseOperator& b) { return multiply(a, b) - multiply(b, a); }

bool terms_commute(const PauliTerm& a, const PauliTerm& b) {
    int anti = 0;
    for (const auto& [q, p] : a.factors) {
        auto it = b.factors.find(q);
        if (it != b.factors.end() && it->second != p) ++anti;
    }
    return anti % 2 == 0;
}

namespace serial {

DenseOperator to_dense(const PauliOperatorSum& op) {
    DenseOperator out(op.n_qubits);
    for (const auto& t : op.terms) {
        const std::uint64_t x = t.x_mask();
        const std::uint64_t z = t.z_mask();
        for (std::size_t col = 0; col < out.dim; ++col) {
            double v = t.coefficient;
            for (int q = 0; q < op.n_qubits; ++q)
                if (((z >> q) & 1U) && ((col >> q) & 1U)) v = -v;
            out(col ^ x, col) += v;
        }
    }
    return out;
}

DenseOperator multiply(const DenseOperator& a, const DenseOperator& b) {
    if (a.dim != b.dim) throw DimensionError("operator sizes differ");
    DenseOperator out(a.n_qubits);
    for (std::size_t r = 0; r < a.dim; ++r)
        for (std::size_t c = 0; c < a.dim; ++c) {
            double s = 0.0;
            for (std::size_t k = 0; k < a.dim; ++k) s += a(r, k) * b(k, c);
            out(r, c) = s;
        }
    return out;
}

}  // namespace serial

}  // namespace dwall
