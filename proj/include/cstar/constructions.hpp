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
#include "cstar/subalgebra.hpp"

namespace cstar {

/// Direct sum of finitely many algebras with the coordinate injections and
/// projections. The sup norm over summands makes the projections
/// contractive MIU maps; the injections preserve multiplication and
/// involution and are isometric, but hit the unit only when there is a
/// single summand.
struct DirectSum {
  Algebra sum;
  std::vector<LinearMap> inject;   // A_k -> sum
  std::vector<LinearMap> project;  // sum -> A_k
};

DirectSum direct_sum(const std::vector<Algebra>& parts);

/// The tupling <f_1, ..., f_K> into the direct sum of the codomains.
/// Requires all maps to share a domain; satisfies project_k o tupling = f_k
/// exactly at the level of stored coordinates.
LinearMap tuple_map(const DirectSum& sum, const std::vector<LinearMap>& maps);

/// The equaliser {a : f(a) = g(a)} of two MIU maps, with the inclusion kept
/// as a coordinate basis into the domain.
struct Equaliser {
  SubalgebraView view;

  /// The inclusion map realized on coordinates: columns are the basis of the
  /// kernel of f - g. include(c) embeds coefficients as a domain element.
  const Matrix& inclusion_coords() const { return view.basis_matrix(); }
};

/// Kernel of f - g by singular value thresholding at tol. Refuses (throws
/// std::invalid_argument) unless both maps pass the MIU checks, since for
/// merely positive maps the equalizing set need not be closed under
/// multiplication.
Equaliser equaliser(const LinearMap& f, const LinearMap& g, const Tolerance& tol = {});

/// For d with range inside the equaliser, the factorization h with
/// include o h = d. Returns the factored map (as a LinearMap into the
/// parent, recomposed through the basis) together with the residual
/// ||include o h - d||; the residual is the verdict margin.
struct EqualiserFactorization {
  LinearMap recomposed;  // include o h, a map into the parent algebra
  Matrix h_coords;       // (subspace dim) x (dom dim)
  Verdict verdict;
};
EqualiserFactorization factor_through_equaliser(const Equaliser& eq, const LinearMap& d,
                                                const Tolerance& tol = {});

}  // namespace cstar
