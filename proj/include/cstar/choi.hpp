// Copyright 2026 The cstar-workbench authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <vector>

#include "cstar/linear_map.hpp"
#include "cstar/tolerance.hpp"
#include "cstar/verdict.hpp"

namespace cstar {

/// Choi matrices of a map, one per domain block: for block k of dimension n,
/// C_k = sum_ij E_ij (x) f(E_ij) with the codomain realized block-diagonally
/// in M_M, M the codomain representation dimension. Each C_k has size n*M.
///
/// Complete positivity of f is equivalent to every C_k being positive
/// semidefinite: positivity in a matrix amplification of a direct sum
/// decomposes blockwise, so f is completely positive iff every restriction
/// to a domain block is, and for a full matrix block M_n the n-level Choi
/// test decides complete positivity (the amplification level never needs to
/// exceed the domain block dimension).
struct ChoiData {
  std::vector<Matrix> blocks;
  std::vector<Eigen::VectorXd> eigenvalues;  // ascending, per block
  double min_eigenvalue = 0.0;
  double hermiticity_defect = 0.0;

  /// All eigenvalues across blocks, ascending.
  std::vector<double> all_eigenvalues() const;
};

ChoiData choi(const LinearMap& f);

/// PSD test of every Choi block. Margin is the minimal eigenvalue; a failing
/// verdict names the block.
Verdict check_completely_positive(const LinearMap& f, const Tolerance& tol = {});

/// The amplification M_m(f): f applied entrywise to m x m matrices over the
/// domain. Uses the isomorphism M_m(M_n1 + ... + M_nK) = M_{m n_1} + ... +
/// M_{m n_K}, with entry (r, s) of the m x m layer mapped to the (r, s)
/// sub-block of each amplified block. amplify(f, 1) returns f itself.
LinearMap amplify(const LinearMap& f, int m);

/// Operator norm of a square matrix of algebra elements, realized as a
/// complex (m * rep_dim)^2 matrix through the block-diagonal representation.
/// An optional block order selects a different (equivalent) faithful
/// representation; the result does not depend on it beyond roundoff.
double matrix_norm_over_algebra(const std::vector<std::vector<Element>>& entries,
                                const std::optional<std::vector<int>>& block_order =
                                    std::nullopt);

}  // namespace cstar
