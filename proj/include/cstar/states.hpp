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

#include <string>
#include <vector>

#include "cstar/linear_map.hpp"
#include "cstar/tolerance.hpp"
#include "cstar/verdict.hpp"

namespace cstar {

/// A state: a positive unital functional into C, together with how it was
/// produced (pure per-block functionals and mixing weights when known).
struct StateSample {
  LinearMap functional;  // cod is the one-dimensional algebra
  std::string provenance;
  std::vector<double> mixing_weights;

  Complex operator()(const Element& a) const { return functional(a).scalar(); }
};

/// The density-matrix representation of a functional phi: A -> C, one matrix
/// rho_k per block with phi(a) = sum_k tr(rho_k a_k).
std::vector<Matrix> dual_densities(const LinearMap& phi);

/// Whether phi is a state: unital and positive. Positivity of a functional
/// is decided exactly through its dual densities (phi is positive iff every
/// rho_k is PSD), so no sampling is involved. Margin is the minimum of the
/// unitality headroom and the smallest density eigenvalue.
Verdict is_state(const LinearMap& phi, const Tolerance& tol = {});

/// The state (lambda, mu) |-> x lambda + (1 - x) mu on C^2. Requires
/// 0 <= x <= 1; x = 1 gives the first coordinate character, x = 0 the
/// second.
StateSample state_from_x(double x);

}  // namespace cstar
