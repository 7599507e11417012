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

#include "cstar/states.hpp"

#include <stdexcept>

namespace cstar {

std::vector<Matrix> dual_densities(const LinearMap& phi) {
  if (phi.cod().dim() != 1)
    throw std::invalid_argument("dual_densities: functional must map into C");
  const Algebra& dom = phi.dom();
  std::vector<Matrix> densities;
  densities.reserve(static_cast<size_t>(dom.num_blocks()));
  for (int k = 0; k < dom.num_blocks(); ++k) {
    const int n = dom.block_dim(k);
    Matrix rho(n, n);
    // phi(E_ij) = tr(rho E_ij) = rho(j, i)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        rho(j, i) = phi.basis_images()[static_cast<size_t>(
                        matrix_unit_index(dom, k, i, j))].scalar();
    densities.push_back(std::move(rho));
  }
  return densities;
}

Verdict is_state(const LinearMap& phi, const Tolerance& tol) {
  if (phi.cod().dim() != 1)
    return Verdict::fail(0.0, {{"reason", "codomain is not C"}});
  const Complex at_unit = phi(Element::unit(phi.dom())).scalar();
  const double unit_defect = std::abs(at_unit - Complex(1.0, 0.0));
  if (!tol.close(unit_defect, 1.0))
    return Verdict::fail(-unit_defect, {{"reason", "not unital"},
                                        {"phi_of_unit", {at_unit.real(), at_unit.imag()}}});
  double min_eig = 0.0;
  bool first = true;
  for (const Matrix& rho : dual_densities(phi)) {
    const double defect = detail::matrix_operator_norm(rho - rho.adjoint());
    if (!tol.close(defect, 1.0))
      return Verdict::fail(-defect, {{"reason", "dual density not Hermitian"}});
    const Eigen::VectorXd vals = detail::hermitian_eigenvalues((rho + rho.adjoint()) / 2.0);
    if (vals.size() > 0 && (first || vals(0) < min_eig)) {
      min_eig = vals(0);
      first = false;
    }
  }
  if (min_eig < -tol.abs)
    return Verdict::fail(min_eig, {{"reason", "dual density not PSD"},
                                   {"min_eigenvalue", min_eig}},
                         "exact (dual density)");
  return Verdict::pass(std::min(min_eig, 1.0 - unit_defect), "exact (dual density)");
}

StateSample state_from_x(double x) {
  if (x < 0.0 || x > 1.0)
    throw std::invalid_argument("state_from_x: x must lie in [0, 1]");
  const Algebra c2 = Algebra::scalars(2);
  const Algebra scalars = Algebra::scalars(1);
  Matrix first(1, 1), second(1, 1);
  first(0, 0) = Complex(x, 0.0);
  second(0, 0) = Complex(1.0 - x, 0.0);
  LinearMap functional(c2, scalars,
                       {Element(scalars, {first}), Element(scalars, {second})});
  return StateSample{std::move(functional), "interval point x = " + std::to_string(x),
                     {x, 1.0 - x}};
}

}  // namespace cstar
