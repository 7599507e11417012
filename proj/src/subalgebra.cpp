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

#include "cstar/subalgebra.hpp"

#include <stdexcept>

namespace cstar {

SubalgebraView::SubalgebraView(Algebra parent, std::vector<Element> basis)
    : parent_(std::move(parent)), basis_(std::move(basis)) {
  basis_matrix_.resize(parent_.dim(), static_cast<Eigen::Index>(basis_.size()));
  for (size_t j = 0; j < basis_.size(); ++j) {
    if (basis_[j].parent() != parent_)
      throw std::invalid_argument("SubalgebraView: basis element from another algebra");
    basis_matrix_.col(static_cast<Eigen::Index>(j)) = basis_[j].coords();
  }
  solver_.compute(basis_matrix_);
}

Element SubalgebraView::include(const Vector& coefficients) const {
  if (coefficients.size() != subspace_dim())
    throw std::invalid_argument("SubalgebraView::include: coefficient length mismatch");
  return Element::from_coords(parent_, basis_matrix_ * coefficients);
}

Vector SubalgebraView::coordinates_of(const Element& v) const {
  if (v.parent() != parent_)
    throw std::invalid_argument("SubalgebraView::coordinates_of: parent mismatch");
  return solver_.solve(v.coords());
}

double SubalgebraView::span_residual(const Element& v) const {
  const Vector coords = v.coords();
  const Vector fitted = basis_matrix_ * solver_.solve(coords);
  return (coords - fitted).norm();
}

Verdict SubalgebraView::verify_closure(const Tolerance& tol) const {
  if (solver_.rank() != subspace_dim())
    return Verdict::fail(0.0, {{"reason", "basis is linearly dependent"},
                               {"rank", solver_.rank()}});
  double worst = 0.0;
  nlohmann::json witness;
  auto check = [&](const Element& v, const char* kind, size_t i, size_t j) {
    const double r = span_residual(v);
    if (r > worst) {
      worst = r;
      witness = {{"kind", kind}, {"i", i}, {"j", j}, {"residual", r}};
    }
  };
  for (size_t i = 0; i < basis_.size(); ++i) {
    check(star(basis_[i]), "star", i, i);
    for (size_t j = 0; j < basis_.size(); ++j)
      check(mul(basis_[i], basis_[j]), "product", i, j);
  }
  if (tol.close(worst, 1.0)) return Verdict::pass(worst);
  return Verdict::fail(worst, witness);
}

bool SubalgebraView::contains_unit(const Tolerance& tol) const {
  return tol.close(span_residual(Element::unit(parent_)), 1.0);
}

}  // namespace cstar
