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

#include "cstar/algebra.hpp"

namespace cstar {

/// A *-subalgebra of a parent algebra, stored as a spanned subspace with a
/// linearly independent basis. The span is kept as is; elements of the view
/// live in the parent (no re-blocking into an abstract algebra).
class SubalgebraView {
 public:
  SubalgebraView(Algebra parent, std::vector<Element> basis);

  const Algebra& parent() const { return parent_; }
  const std::vector<Element>& basis() const { return basis_; }
  int subspace_dim() const { return static_cast<int>(basis_.size()); }

  /// Basis vectors as columns of a (parent dim) x (subspace dim) matrix.
  const Matrix& basis_matrix() const { return basis_matrix_; }

  /// The element of the parent with the given coordinates in this basis.
  /// This realizes the inclusion map of the view.
  Element include(const Vector& coefficients) const;

  /// Residual of v after orthogonal projection onto the span.
  double span_residual(const Element& v) const;
  /// Coordinates of v in this basis (least squares; meaningful when the
  /// span residual is small).
  Vector coordinates_of(const Element& v) const;

  /// Closure of the span under star and under products of basis pairs, plus
  /// linear independence of the basis. Margin is the worst residual.
  Verdict verify_closure(const Tolerance& tol = {}) const;

  /// Whether the parent unit lies in the span.
  bool contains_unit(const Tolerance& tol = {}) const;

 private:
  Algebra parent_;
  std::vector<Element> basis_;
  Matrix basis_matrix_;
  Eigen::CompleteOrthogonalDecomposition<Matrix> solver_;
};

}  // namespace cstar
