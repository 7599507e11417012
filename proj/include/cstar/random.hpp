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

#include <random>

#include "cstar/algebra.hpp"

namespace cstar {

class LinearMap;

using Rng = std::mt19937_64;

/// Complex matrix with independent standard complex Gaussian entries.
Matrix random_ginibre(int rows, int cols, Rng& rng);

/// Haar-ish random unitary: QR of a Ginibre matrix with phase-fixed R.
Matrix random_unitary(int n, Rng& rng);

/// Element with Ginibre blocks.
Element random_element(const Algebra& a, Rng& rng);

/// Random self-adjoint element.
Element random_self_adjoint(const Algebra& a, Rng& rng);

/// Random positive element g*g.
Element random_positive(const Algebra& a, Rng& rng);

/// Random element with 0 <= a <= 1: unitary conjugation of uniform [0,1]
/// eigenvalues in every block.
Element random_contraction_01(const Algebra& a, Rng& rng);

/// Random density matrix (positive, unit trace).
Matrix random_density(int n, Rng& rng);

/// Random state on a: per-block density functionals mixed with
/// Dirichlet(1,...,1) weights across blocks.
LinearMap random_state(const Algebra& a, Rng& rng);

/// Random unital positive map. Drawn from a mix of constructions: convex
/// combinations of unitary conjugations, pinchings, depolarizing-style
/// mixes with states, and transposes; positivity holds for every branch.
LinearMap random_pu_map(const Algebra& dom, const Algebra& cod, Rng& rng);

}  // namespace cstar
