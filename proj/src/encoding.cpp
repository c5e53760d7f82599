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

#include "dwall/encoding.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "dwall/errors.hpp"

namespace dwall {

std::string_view to_string(EncodingKind kind) { return kind == EncodingKind::DomainWall ? "dw" : "onehot"; }

EncodingKind parse_encoding(std::string_view text) {
    if (text == "dw" || text == "domainwall" || text == "domain-wall") return EncodingKind::DomainWall;
    if (text == "onehot" || text == "one-hot" || text == "oh") return EncodingKind::OneHot;
    throw ParseError("unknown encoding '" + std::string(text) + "'");
}

ValueMatrix::ValueMatrix(int rows, int cols, double fill) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DomainError("ValueMatrix: negative dimension");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill);
}

ValueMatrix ValueMatrix::identity(int m, double scale) {
    ValueMatrix e(m, m);
    for (int i = 0; i < m; ++i) e(i, i) = scale;
    return e;
}

double ValueMatrix::max_abs() const {
    double best = 0.0;
    for (double v : data_) best = std::max(best, std::abs(v));
    return best;
}

bool ValueMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](double v) { return v == 0.0; });
}

namespace {

void check_new_variable(int m, double lambda) {
    if (m < 2) throw DomainError("discrete variable needs m >= 2, got " + std::to_string(m));
    if (!(lambda > 0.0)) throw DomainError("core strength lambda must be positive");
}

VariableHandle append_handle(EncodedProblem& p, EncodingKind kind, int m, double lambda) {
    VariableHandle v;
    v.id = static_cast<int>(p.variables.size());
    v.kind = kind;
    v.m = m;
    v.lambda = lambda;
    v.first_qubit = p.model.add_qubits(v.num_qubits());
    p.variables.push_back(v);
    p.interaction_load.push_back(0.0);
    return v;
}

void check_value(const VariableHandle& v, int value) {
    if (value < 0 || value >= v.m)
        throw DomainError("value " + std::to_string(value) + " outside 0.." + std::to_string(v.m - 1));
}

/// Chain spin Z-bar_i of a domain-wall variable, with the virtual ends
/// Z-bar_{-1} = -1 and Z-bar_N = +1 resolved to constants.
LinearForm chain_spin(const VariableHandle& v, int i) {
    const int n = v.num_qubits();
    if (i <= -1) return {{}, -1.0};
    if (i >= n) return {{}, 1.0};
    return {{{v.first_qubit + i, 1.0}}, 0.0};
}

/// Adds scale * x * y for forms over disjoint qubit sets.
void add_product(IsingModel& model, const LinearForm& x, const LinearForm& y, double scale) {
    model.add_offset(scale * x.offset * y.offset);
    for (const auto& [q, c] : x.terms) model.add_field(q, scale * c * y.offset);
    for (const auto& [q, c] : y.terms) model.add_field(q, scale * c * x.offset);
    for (const auto& [a, ca] : x.terms)
        for (const auto& [b, cb] : y.terms) model.add_coupler(a, b, scale * ca * cb);
}

void add_form(IsingModel& model, const LinearForm& x, double scale) {
    model.add_offset(scale * x.offset);
    for (const auto& [q, c] : x.terms) model.add_field(q, scale * c);
}

void check_handle(const EncodedProblem& p, const VariableHandle& v) {
    if (v.id < 0 || v.id >= static_cast<int>(p.variables.size()) || p.variables[static_cast<std::size_t>(v.id)] != v)
        throw MappingError("variable handle does not belong to this problem");
}

}  // namespace

VariableHandle add_domain_wall_variable(EncodedProblem& p, int m, double lambda) {
    check_new_variable(m, lambda);
    VariableHandle v = append_handle(p, EncodingKind::DomainWall, m, lambda);
    const int n = v.num_qubits();
    const int q0 = v.first_qubit;
    for (int i = 0; i + 1 < n; ++i) p.model.add_coupler(q0 + i, q0 + i + 1, -lambda);
    p.model.add_field(q0, lambda);
    p.model.add_field(q0 + n - 1, -lambda);
    return v;
}

VariableHandle add_one_hot_variable(EncodedProblem& p, int m, double lambda) {
    check_new_variable(m, lambda);
    VariableHandle v = append_handle(p, EncodingKind::OneHot, m, lambda);
    const int q0 = v.first_qubit;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) p.model.add_coupler(q0 + i, q0 + j, lambda);
        p.model.add_field(q0 + i, -(m - 2) * lambda);
    }
    return v;
}

VariableHandle add_variable(EncodedProblem& p, EncodingKind kind, int m, double lambda) {
    return kind == EncodingKind::DomainWall ? add_domain_wall_variable(p, m, lambda)
                                            : add_one_hot_variable(p, m, lambda);
}

LinearForm delta_expansion(const VariableHandle& v, int value) {
    check_value(v, value);
    if (v.kind == EncodingKind::OneHot) return {{{v.first_qubit + value, -0.5}}, 0.5};

    // (Z-bar_i - Z-bar_{i-1}) / 2
    const LinearForm right = chain_spin(v, value);
    const LinearForm left = chain_spin(v, value - 1);
    LinearForm out;
    out.offset = 0.5 * (right.offset - left.offset);
    for (const auto& [q, c] : right.terms) out.terms.emplace_back(q, 0.5 * c);
    for (const auto& [q, c] : left.terms) out.terms.emplace_back(q, -0.5 * c);
    return out;
}

void add_value_penalty(EncodedProblem& p, const VariableHandle& v, int value, double weight) {
    check_handle(p, v);
    check_value(v, value);
    if (weight == 0.0) return;
    add_form(p.model, delta_expansion(v, value), weight);
}

IsingModel interaction_terms(const VariableHandle& vk, const VariableHandle& vl, const ValueMatrix& e) {
    if (vk.id == vl.id && vk.first_qubit == vl.first_qubit)
        throw AliasingError("interaction between a variable and itself");
    if (e.rows() != vk.m || e.cols() != vl.m)
        throw DomainError("value matrix is " + std::to_string(e.rows()) + "x" + std::to_string(e.cols()) +
                          ", variables need " + std::to_string(vk.m) + "x" + std::to_string(vl.m));
    if (std::max(vk.first_qubit, vl.first_qubit) < std::min(vk.end_qubit(), vl.end_qubit()))
        throw AliasingError("interacting variables share qubits");

    const int nk = vk.num_qubits();
    const int nl = vl.num_qubits();
    IsingModel out(std::max(vk.end_qubit(), vl.end_qubit()));

    // delta_i = c_i + sum_a D[i][a] Z_a for both variables, then
    // sum_ij E_ij delta_i delta'_j collapses to D^T E D' on the couplers.
    std::vector<double> ck(static_cast<std::size_t>(vk.m)), cl(static_cast<std::size_t>(vl.m));
    std::vector<double> dk(static_cast<std::size_t>(vk.m * nk), 0.0), dl(static_cast<std::size_t>(vl.m * nl), 0.0);
    for (int i = 0; i < vk.m; ++i) {
        const LinearForm f = delta_expansion(vk, i);
        ck[static_cast<std::size_t>(i)] = f.offset;
        for (const auto& [q, c] : f.terms) dk[static_cast<std::size_t>(i * nk + (q - vk.first_qubit))] += c;
    }
    for (int j = 0; j < vl.m; ++j) {
        const LinearForm f = delta_expansion(vl, j);
        cl[static_cast<std::size_t>(j)] = f.offset;
        for (const auto& [q, c] : f.terms) dl[static_cast<std::size_t>(j * nl + (q - vl.first_qubit))] += c;
    }

    double offset = 0.0;
    std::vector<double> hk(static_cast<std::size_t>(nk), 0.0), hl(static_cast<std::size_t>(nl), 0.0);
    std::vector<double> jkl(static_cast<std::size_t>(nk * nl), 0.0);
    for (int i = 0; i < vk.m; ++i) {
        for (int j = 0; j < vl.m; ++j) {
            const double eij = e(i, j);
            if (eij == 0.0) continue;
            offset += eij * ck[static_cast<std::size_t>(i)] * cl[static_cast<std::size_t>(j)];
            for (int a = 0; a < nk; ++a) {
                const double da = dk[static_cast<std::size_t>(i * nk + a)];
                if (da == 0.0) continue;
                hk[static_cast<std::size_t>(a)] += eij * da * cl[static_cast<std::size_t>(j)];
                for (int b = 0; b < nl; ++b)
                    jkl[static_cast<std::size_t>(a * nl + b)] += eij * da * dl[static_cast<std::size_t>(j * nl + b)];
            }
            for (int b = 0; b < nl; ++b)
                hl[static_cast<std::size_t>(b)] += eij * ck[static_cast<std::size_t>(i)] * dl[static_cast<std::size_t>(j * nl + b)];
        }
    }

    out.add_offset(offset);
    for (int a = 0; a < nk; ++a) out.add_field(vk.first_qubit + a, hk[static_cast<std::size_t>(a)]);
    for (int b = 0; b < nl; ++b) out.add_field(vl.first_qubit + b, hl[static_cast<std::size_t>(b)]);
    for (int a = 0; a < nk; ++a)
        for (int b = 0; b < nl; ++b)
            out.add_coupler(vk.first_qubit + a, vl.first_qubit + b, jkl[static_cast<std::size_t>(a * nl + b)]);
    return out;
}

void add_interaction(EncodedProblem& p, const VariableHandle& vk, const VariableHandle& vl, const ValueMatrix& e) {
    check_handle(p, vk);
    check_handle(p, vl);
    if (vk.id == vl.id) throw AliasingError("interaction between a variable and itself");
    const IsingModel terms = interaction_terms(vk, vl, e);
    std::vector<int> identity(static_cast<std::size_t>(terms.num_qubits()));
    for (int q = 0; q < terms.num_qubits(); ++q) identity[static_cast<std::size_t>(q)] = q;
    p.model = merge(p.model, terms, identity);
    const double load = e.max_abs();
    p.interaction_load[static_cast<std::size_t>(vk.id)] += load;
    p.interaction_load[static_cast<std::size_t>(vl.id)] += load;
}

std::optional<int> decode(const VariableHandle& v, std::span<const std::int8_t> s) {
    if (static_cast<int>(s.size()) < v.end_qubit()) throw DimensionError("decode: spin vector too short");
    const auto bit = [&](int i) { return s[static_cast<std::size_t>(v.first_qubit + i)] < 0; };
    const int n = v.num_qubits();
    if (v.kind == EncodingKind::DomainWall) {
        int k = 0;
        while (k < n && bit(k)) ++k;
        for (int i = k; i < n; ++i)
            if (bit(i)) return std::nullopt;
        return k;
    }
    std::optional<int> hot;
    for (int i = 0; i < n; ++i) {
        if (!bit(i)) continue;
        if (hot) return std::nullopt;
        hot = i;
    }
    return hot;
}

bool is_valid(const VariableHandle& v, std::span<const std::int8_t> s) { return decode(v, s).has_value(); }

std::optional<std::vector<int>> decode_all(const EncodedProblem& p, std::span<const std::int8_t> s) {
    std::vector<int> values;
    values.reserve(p.variables.size());
    for (const auto& v : p.variables) {
        auto value = decode(v, s);
        if (!value) return std::nullopt;
        values.push_back(*value);
    }
    return values;
}

SpinAssignment encode_values(const EncodedProblem& p, std::span<const int> values) {
    if (values.size() != p.variables.size()) throw DimensionError("encode_values: one value per variable required");
    SpinAssignment s(static_cast<std::size_t>(p.model.num_qubits()), 1);
    for (std::size_t k = 0; k < values.size(); ++k) {
        const auto& v = p.variables[k];
        check_value(v, values[k]);
        if (v.kind == EncodingKind::DomainWall) {
            for (int i = 0; i < values[k]; ++i) s[static_cast<std::size_t>(v.first_qubit + i)] = -1;
        } else {
            s[static_cast<std::size_t>(v.first_qubit + values[k])] = -1;
        }
    }
    return s;
}

void add_order_constraint(EncodedProblem& p, const VariableHandle& vj, const VariableHandle& vj1, double strength) {
    check_handle(p, vj);
    check_handle(p, vj1);
    if (vj.kind != EncodingKind::DomainWall || vj1.kind != EncodingKind::DomainWall)
        throw DomainError("order constraint needs two domain-wall variables");
    if (vj.m != vj1.m) throw DomainError("order constraint needs variables of equal size");
    if (vj.id == vj1.id) throw AliasingError("order constraint between a variable and itself");
    if (!(strength > 0.0)) throw DomainError("order constraint strength must be positive");

    // (1 - Zbar^j_{i-1})/2 is [value_j >= i]; (1 + Zbar^{j+1}_i)/2 is [value_{j+1} <= i].
    // Summed over every wall site i = 0..N the product counts the i with
    // value_{j+1} <= i <= value_j, which is zero exactly when value_j < value_{j+1}.
    const int n = vj.num_qubits();
    for (int i = 0; i <= n; ++i) {
        LinearForm upper = chain_spin(vj, i - 1);
        for (auto& term : upper.terms) term.second = -term.second;
        upper.offset = 1.0 - upper.offset;
        LinearForm lower = chain_spin(vj1, i);
        lower.offset += 1.0;
        add_product(p.model, upper, lower, 0.25 * strength);
    }
}

EncodedProblem build_k_hot_ensemble(int k, int m, double lambda, double order_strength) {
    if (k < 1) throw DomainError("k-hot ensemble needs k >= 1");
    if (k > m) throw InfeasibleError("k-hot ensemble with k > m has no strictly increasing assignment");
    EncodedProblem p;
    for (int j = 0; j < k; ++j) add_domain_wall_variable(p, m, lambda);
    for (int j = 0; j + 1 < k; ++j)
        add_order_constraint(p, p.variables[static_cast<std::size_t>(j)], p.variables[static_cast<std::size_t>(j + 1)],
                             order_strength);
    return p;
}

double recommended_lambda(const EncodedProblem& p, const VariableHandle& v) {
    check_handle(p, v);
    return 1.0 + p.interaction_load[static_cast<std::size_t>(v.id)];
}

std::vector<std::string> lambda_warnings(const EncodedProblem& p) {
    std::vector<std::string> out;
    for (const auto& v : p.variables) {
        const double rec = recommended_lambda(p, v);
        if (v.lambda < rec) {
            std::ostringstream msg;
            msg << "variable " << v.id << ": core strength " << v.lambda << " below recommended " << rec;
            out.push_back(msg.str());
        }
    }
    return out;
}

EncodingMetrics encoding_metrics(MetricKind kind, int m) {
    if (m < 2) throw DomainError("encoding_metrics: m must be >= 2");
    switch (kind) {
        case MetricKind::DomainWall:
            return {m - 1, m - 2, "linear"};
        case MetricKind::OneHot:
            return {m, m * (m - 1) / 2, "complete"};
        case MetricKind::BinaryQubitCountOnly:
            return {static_cast<int>(std::bit_width(static_cast<unsigned>(m - 1))), std::nullopt, std::nullopt};
    }
    throw DomainError("encoding_metrics: unknown kind");
}

}  // namespace dwall
