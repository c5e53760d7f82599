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

#include "dwall/mixers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "dwall/errors.hpp"

namespace dwall {

namespace {

void require_domain_wall(const VariableHandle& v) {
    if (v.kind != EncodingKind::DomainWall) throw DomainError("operation needs a domain-wall variable");
}

/// Zbar_i as (sign, qubit or -1 for a virtual constant).
std::pair<double, int> chain_factor(const VariableHandle& v, int i) {
    if (i < 0) return {-1.0, -1};
    if (i >= v.num_qubits()) return {1.0, -1};
    return {1.0, v.first_qubit + i};
}

/// coefficient * Zbar_a * Zbar_b (either may be virtual) times extra factors.
PauliTerm chain_product(const VariableHandle& v, double coefficient, std::initializer_list<int> sites,
                        std::map<int, Pauli> extra = {}) {
    PauliTerm t{coefficient, std::move(extra)};
    for (int i : sites) {
        const auto [sign, q] = chain_factor(v, i);
        t.coefficient *= sign;
        if (q >= 0) t.factors[q] = Pauli::Z;
    }
    return t;
}

double max_internal_commutator(const PauliOperatorSum& part) {
    double worst = 0.0;
    for (std::size_t a = 0; a < part.terms.size(); ++a) {
        const DenseOperator ta = to_dense(part.terms[a], part.n_qubits);
        for (std::size_t b = a + 1; b < part.terms.size(); ++b)
            worst = std::max(worst, commutator(ta, to_dense(part.terms[b], part.n_qubits)).max_abs());
    }
    return worst;
}

}  // namespace

PauliOperatorSum build_mixer(const VariableHandle& v) {
    require_domain_wall(v);
    PauliOperatorSum op{v.end_qubit(), {}};
    for (int i = 0; i < v.num_qubits(); ++i) {
        const int q = v.first_qubit + i;
        op.add(chain_product(v, 1.0, {i - 1}, {{q, Pauli::X}}));
        op.add(chain_product(v, -1.0, {i + 1}, {{q, Pauli::X}}));
    }
    return op;
}

std::pair<PauliOperatorSum, PauliOperatorSum> split_even_odd(const PauliOperatorSum& mixer, int first_qubit) {
    PauliOperatorSum even{mixer.n_qubits, {}};
    PauliOperatorSum odd{mixer.n_qubits, {}};
    for (const auto& t : mixer.terms) {
        const std::uint64_t x = t.x_mask();
        if (std::popcount(x) != 1) throw DomainError("split_even_odd: every term needs exactly one X factor");
        const int q = std::countr_zero(x);
        ((q - first_qubit) % 2 == 0 ? even : odd).terms.push_back(t);
    }
    return {even, odd};
}

PauliOperatorSum domain_wall_number(const VariableHandle& v) {
    require_domain_wall(v);
    PauliOperatorSum op{v.end_qubit(), {}};
    for (int i = -1; i < v.num_qubits(); ++i) {
        op.add(PauliTerm{0.5, {}});
        op.add(chain_product(v, -0.5, {i, i + 1}));
    }
    return op;
}

bool SubspaceReport::passed() const {
    return commutator_mixer == 0.0 && commutator_even == 0.0 && commutator_odd == 0.0 && cross_sector == 0.0 &&
           split_residual == 0.0 && even_internal == 0.0 && odd_internal == 0.0 && valid_block_tridiagonal &&
           valid_block_zero_diagonal && valid_block_path;
}

std::string SubspaceReport::summary() const {
    std::ostringstream out;
    const auto line = [&](const char* name, bool ok, double value) {
        out << (ok ? "PASS " : "FAIL ") << name << " = " << value << '\n';
    };
    out << "domain-wall mixer check, m = " << m << " (neighbour matrix elements are -2 in this normalisation)\n";
    line("max|[H_mix, D]|", commutator_mixer == 0.0, commutator_mixer);
    line("max|[H_even, D]|", commutator_even == 0.0, commutator_even);
    line("max|[H_odd, D]|", commutator_odd == 0.0, commutator_odd);
    line("max cross-sector element", cross_sector == 0.0, cross_sector);
    line("max|H_even + H_odd - H_mix|", split_residual == 0.0, split_residual);
    line("max term commutator in H_even", even_internal == 0.0, even_internal);
    line("max term commutator in H_odd", odd_internal == 0.0, odd_internal);
    out << (valid_block_tridiagonal ? "PASS " : "FAIL ") << "valid block tridiagonal\n";
    out << (valid_block_zero_diagonal ? "PASS " : "FAIL ") << "valid block zero diagonal\n";
    out << (valid_block_path ? "PASS " : "FAIL ") << "valid block connects consecutive values\n";
    out << (passed() ? "OVERALL PASS" : "OVERALL FAIL") << '\n';
    return out.str();
}

std::string SubspaceReport::valid_block_csv() const {
    std::ostringstream out;
    for (const auto& row : valid_block) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
        out << '\n';
    }
    return out.str();
}

SubspaceReport check_subspace_preservation(const VariableHandle& handle) {
    require_domain_wall(handle);
    if (handle.m > kMaxMixerCheckM)
        throw SizeError("check_subspace_preservation: m = " + std::to_string(handle.m) + " exceeds cap of " +
                        std::to_string(kMaxMixerCheckM));
    VariableHandle v = handle;
    v.first_qubit = 0;
    return check_subspace_preservation(v, build_mixer(v));
}

SubspaceReport check_subspace_preservation(const VariableHandle& handle, const PauliOperatorSum& mixer) {
    require_domain_wall(handle);
    if (handle.m > kMaxMixerCheckM)
        throw SizeError("check_subspace_preservation: m = " + std::to_string(handle.m) + " exceeds cap of " +
                        std::to_string(kMaxMixerCheckM));
    if (mixer.n_qubits != handle.num_qubits())
        throw DimensionError("check_subspace_preservation: mixer acts on " + std::to_string(mixer.n_qubits) +
                             " qubits, variable has " + std::to_string(handle.num_qubits()));
    VariableHandle v = handle;
    v.first_qubit = 0;

    SubspaceReport r;
    r.m = v.m;
    const auto [even, odd] = split_even_odd(mixer);
    const DenseOperator h = to_dense(mixer);
    const DenseOperator he = to_dense(even);
    const DenseOperator ho = to_dense(odd);
    const DenseOperator d = to_dense(domain_wall_number(v));

    r.commutator_mixer = commutator(h, d).max_abs();
    r.commutator_even = commutator(he, d).max_abs();
    r.commutator_odd = commutator(ho, d).max_abs();
    r.split_residual = (he + ho - h).max_abs();
    r.even_internal = max_internal_commutator(even);
    r.odd_internal = max_internal_commutator(odd);

    for (std::size_t row = 0; row < h.dim; ++row)
        for (std::size_t col = 0; col < h.dim; ++col) {
            if (d(row, row) == d(col, col)) continue;
            r.cross_sector = std::max({r.cross_sector, std::abs(h(row, col)), std::abs(he(row, col)),
                                       std::abs(ho(row, col))});
        }

    // value k is the basis state with qubits 0..k-1 set
    const auto index_of_value = [](int k) { return (std::size_t{1} << k) - 1; };
    r.valid_block.assign(static_cast<std::size_t>(v.m), std::vector<double>(static_cast<std::size_t>(v.m), 0.0));
    r.valid_block_tridiagonal = r.valid_block_zero_diagonal = r.valid_block_path = true;
    for (int a = 0; a < v.m; ++a)
        for (int b = 0; b < v.m; ++b) {
            const double x = h(index_of_value(a), index_of_value(b));
            r.valid_block[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = x;
            const int gap = std::abs(a - b);
            if (gap > 1 && x != 0.0) r.valid_block_tridiagonal = false;
            if (gap == 0 && x != 0.0) r.valid_block_zero_diagonal = false;
            if ((gap == 1) != (x != 0.0)) r.valid_block_path = false;
        }
    return r;
}

SubspaceReport check_subspace_preservation(int m) {
    if (m < 2) throw DomainError("check_subspace_preservation: m must be >= 2");
    VariableHandle v;
    v.kind = EncodingKind::DomainWall;
    v.m = m;
    return check_subspace_preservation(v);
}

}  // namespace dwall
