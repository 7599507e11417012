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

#include <vector>

#include "cstar/linear_map.hpp"
#include "cstar/polynomial.hpp"
#include "cstar/states.hpp"
#include "cstar/tolerance.hpp"
#include "cstar/verdict.hpp"

namespace cstar {

/// A character of a commutative algebra: a multiplicative unital functional.
/// On C^n these are exactly the coordinate evaluations.
struct Character {
  LinearMap functional;
  int coordinate = 0;

  Complex operator()(const Element& a) const { return functional(a).scalar(); }
};

/// The n coordinate-evaluation characters of a commutative algebra. This
/// list is exhaustive. Throws for a non-commutative argument.
std::vector<Character> characters(const Algebra& a);

/// The Gelfand transform b |-> (omega(b))_omega into the function-table
/// algebra C^(number of characters). An isomorphism; on C^n it is the
/// identity up to character ordering.
LinearMap gelfand_transform(const Algebra& a);

/// p(a) for self-adjoint a with spectrum in [0 - tol, 1 + tol]: per block,
/// eigendecompose and apply p to the eigenvalues. Agrees with the algebraic
/// evaluation of p at a. Throws when a is not self-adjoint or its spectrum
/// leaves [0, 1] beyond the tolerance.
Element functional_calculus(const Element& a, const Polynomial& p,
                            const Tolerance& tol = {});

/// The degree-one polynomial x |-> lambda x + mu (1 - x), the image of
/// (lambda, mu) under the canonical arrow out of C^2.
Polynomial rho_c2(Complex lambda, Complex mu);

/// Factorization data for a unital positive map sigma out of C^2: the
/// generator a = sigma(1, 0) (which satisfies 0 <= a <= 1) and the induced
/// action p |-> p(a) on polynomials. The verdict bundles the desk-scale
/// checks: sigma_bar(rho(lambda, mu)) = sigma(lambda, mu) on a grid,
/// multiplicativity of sigma_bar on monomial pairs up to the degree bound,
/// involution and unit preservation.
struct C2Factorization {
  Element generator;
  Verdict verdict;

  Element apply(const Polynomial& p, const Tolerance& tol = {}) const {
    return functional_calculus(generator, p, tol);
  }
};

C2Factorization c2_factorization(const LinearMap& sigma, int degree_bound = 8,
                                 const Tolerance& tol = {});

/// The concrete witness that positive unital maps out of C^3 need a
/// non-commutative receptacle: a1 = P1/2, a2 = P+/2, a3 = 1 - a1 - a2 in
/// M_2, where P1 projects onto the second coordinate axis and P+ onto the
/// diagonal. All three are positive, they sum to the unit exactly, a1 and
/// a2 do not commute, and f(l1, l2, l3) = l1 a1 + l2 a2 + l3 a3 is unital
/// and positive but not multiplicative.
struct C3Witness {
  Element a1, a2, a3;
  LinearMap f;  // C^3 -> M_2
  double commutator_norm = 0.0;
  std::vector<NamedVerdict> checks;

  bool all_passed() const;
  nlohmann::json report() const;
};

C3Witness c3_witness();

}  // namespace cstar
