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

#include <string>
#include <utility>
#include <vector>

#include "dwall/encoding.hpp"
#include "dwall/pauli.hpp"

namespace dwall {

/// Domain-wall mixer sum_{i=0}^{N-1} (Zbar_{i-1} X_i - X_i Zbar_{i+1}) on the
/// variable's qubits, virtual end spins resolved. Moves a single wall by one
/// site, so on the valid subspace it only connects values v and v +- 1.
/// Matrix elements between neighbouring values are -2 in this normalisation.
PauliOperatorSum build_mixer(const VariableHandle& v);

/// Terms whose X acts on an even (odd) qubit of the chain. Each part is a sum
/// of mutually commuting terms.
std::pair<PauliOperatorSum, PauliOperatorSum> split_even_odd(const PauliOperatorSum& mixer, int first_qubit = 0);

/// sum_{i=-1}^{N-1} (1 - Zbar_i Zbar_{i+1}) / 2: number of walls in the
/// chain extended by its two virtual spins.
PauliOperatorSum domain_wall_number(const VariableHandle& v);

struct SubspaceReport {
    int m = 0;
    double commutator_mixer = 0.0;  ///< max |[H_mix, D]|
    double commutator_even = 0.0;
    double commutator_odd = 0.0;
    double cross_sector = 0.0;      ///< max |<a|H|b>| over wall numbers D(a) != D(b), all three operators
    double split_residual = 0.0;    ///< max |H_even + H_odd - H_mix|
    double even_internal = 0.0;     ///< max pairwise term commutator within the even part
    double odd_internal = 0.0;
    bool valid_block_tridiagonal = false;
    bool valid_block_zero_diagonal = false;
    bool valid_block_path = false;  ///< adjacency of the valid block is exactly the path 0-1-...-(m-1)
    /// Mixer restricted to valid states, rows/cols in value order.
    std::vector<std::vector<double>> valid_block;

    bool passed() const;
    std::string summary() const;
    std::string valid_block_csv() const;
};

inline constexpr int kMaxMixerCheckM = 8;

/// Dense verification on a standalone copy of the variable (re-based to qubit
/// 0), m <= 8.
SubspaceReport check_subspace_preservation(const VariableHandle& v);
SubspaceReport check_subspace_preservation(int m);
/// Same checks for a caller-supplied operator on qubits 0..m-2.
SubspaceReport check_subspace_preservation(const VariableHandle& v, const PauliOperatorSum& mixer);

}  // namespace dwall
