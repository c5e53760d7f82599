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
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dwall {

/// Absolute tolerance used for every energy comparison in the library.
inline constexpr double kEnergyTolerance = 1e-9;

/// One entry per qubit, each +1 or -1. Bit convention: bit = (1 - z) / 2,
/// so bit 1 is spin -1.
using SpinAssignment = std::vector<std::int8_t>;

using QubitPair = std::pair<int, int>;

/// Classical two-body Ising model
///
///     E(z) = offset + sum_i h_i z_i + sum_{i<j} J_ij z_i z_j
///
/// Couplers are keyed by ordered pairs (i < j). Adding to an existing term
/// accumulates; couplers whose sum becomes exactly zero are erased.
class IsingModel {
public:
    IsingModel() = default;
    explicit IsingModel(int n_qubits);

    int num_qubits() const { return static_cast<int>(h_.size()); }

    /// Appends `count` fresh qubits and returns the index of the first one.
    int add_qubits(int count);

    void add_field(int qubit, double value);
    /// Order of (a, b) does not matter; a == b is rejected.
    void add_coupler(int a, int b, double value);
    void add_offset(double value) { offset_ += value; }

    double field(int qubit) const;
    double coupler(int a, int b) const;
    double offset() const { return offset_; }

    const std::vector<double>& fields() const { return h_; }
    const std::map<QubitPair, double>& couplers() const { return j_; }
    std::size_t num_couplers() const { return j_.size(); }
    /// Number of qubits with a nonzero field.
    std::size_t num_fields() const;

    bool operator==(const IsingModel&) const = default;

private:
    void check_index(int qubit) const;

    std::vector<double> h_;
    std::map<QubitPair, double> j_;
    double offset_ = 0.0;
};

double energy(const IsingModel& model, std::span<const std::int8_t> spins);

/// Spins for the basis state whose integer label is `index`; qubit 0 is the
/// least significant bit.
SpinAssignment spins_from_index(std::uint64_t index, int n_qubits);
std::uint64_t index_of(std::span<const std::int8_t> spins);

/// "1100" -> spins (-1, -1, +1, +1). Character k is qubit k.
SpinAssignment spins_from_bits(std::string_view bits);
std::string bits_of(std::span<const std::int8_t> spins);

/// Term-wise sum of two models. Qubit q of `b` lands on qubit `b_mapping[q]`
/// of the result; qubits of `a` keep their indices. The mapping must be
/// injective; targets may overlap `a` (the terms then add up).
IsingModel merge(const IsingModel& a, const IsingModel& b, std::span<const int> b_mapping);

/// Disjoint union: `b` is placed after the qubits of `a`.
IsingModel merge(const IsingModel& a, const IsingModel& b);

struct GroundSet {
    double energy = 0.0;
    /// Minimizers in increasing basis-index order (possibly truncated, see below).
    std::vector<SpinAssignment> states;
    std::vector<std::uint64_t> indices;
    /// Total number of minimizers, even when `states` was truncated.
    std::uint64_t degeneracy = 0;
    bool truncated = false;
    /// First excited level minus ground level; 0 when every state is degenerate.
    double spectrum_gap = 0.0;
};

struct BruteForceOptions {
    int max_qubits = 26;
    /// Upper bound on the number of stored minimizers.
    std::size_t max_states = std::size_t{1} << 20;
};

/// Exhaustive minimization over all 2^n basis states (OpenMP over chunks of
/// a Gray-code walk). Result is independent of the thread count.
GroundSet brute_force(const IsingModel& model, const BruteForceOptions& options = {});

namespace serial {

/// Reference implementation: direct evaluation of every state in index order.
GroundSet brute_force(const IsingModel& model, const BruteForceOptions& options = {});

}  // namespace serial

}  // namespace dwall
