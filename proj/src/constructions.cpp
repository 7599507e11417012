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

#include "cstar/constructions.hpp"

#include <stdexcept>

#include <Eigen/SVD>

#include "cstar/classify.hpp"

namespace cstar {

DirectSum direct_sum(const std::vector<Algebra>& parts) {
  std::vector<int> dims;
  for (const Algebra& a : parts)
    dims.insert(dims.end(), a.block_dims().begin(), a.block_dims().end());
  DirectSum out{Algebra(std::move(dims)), {}, {}};

  int block_offset = 0;
  for (const Algebra& part : parts) {
    // Injection: coordinates of the summand land in its block range.
    Matrix in = Matrix::Zero(out.sum.dim(), part.dim());
    const int coord_offset = out.sum.coord_offset(block_offset);
    for (int p = 0; p < part.dim(); ++p) in(coord_offset + p, p) = Complex(1.0, 0.0);
    out.inject.push_back(LinearMap::from_coord_matrix(part, out.sum, in));
    out.project.push_back(LinearMap::from_coord_matrix(out.sum, part, in.transpose()));
    block_offset += part.num_blocks();
  }
  return out;
}

LinearMap tuple_map(const DirectSum& sum, const std::vector<LinearMap>& maps) {
  if (maps.size() != sum.inject.size())
    throw std::invalid_argument("tuple_map: need one map per summand");
  if (maps.empty()) throw std::invalid_argument("tuple_map: empty family");
  const Algebra& dom = maps[0].dom();
  Matrix m = Matrix::Zero(sum.sum.dim(), dom.dim());
  for (size_t k = 0; k < maps.size(); ++k) {
    if (maps[k].dom() != dom)
      throw std::invalid_argument("tuple_map: maps must share a domain");
    m += sum.inject[k].coord_matrix() * maps[k].coord_matrix();
  }
  return LinearMap::from_coord_matrix(dom, sum.sum, m);
}

Equaliser equaliser(const LinearMap& f, const LinearMap& g, const Tolerance& tol) {
  if (f.dom() != g.dom() || f.cod() != g.cod())
    throw std::invalid_argument("equaliser: maps must share domain and codomain");
  for (const LinearMap* m : {&f, &g}) {
    const MapClassification c = classify(*m);
    if (!c.miu())
      throw std::invalid_argument(
          "equaliser: both maps must be MIU (for merely positive maps the "
          "equalizing set need not be a subalgebra); offending label: " + c.label());
  }
  const Matrix difference = f.coord_matrix() - g.coord_matrix();
  Eigen::JacobiSVD<Matrix> svd(difference, Eigen::ComputeFullV);
  const Eigen::VectorXd sigma = svd.singularValues();
  const double scale = sigma.size() > 0 ? sigma(0) : 0.0;
  std::vector<Element> basis;
  // Right singular vectors below the threshold span the kernel of f - g.
  const Eigen::Index total = svd.matrixV().cols();
  for (Eigen::Index j = 0; j < total; ++j) {
    const double s = j < sigma.size() ? sigma(j) : 0.0;
    if (s <= tol.bound(scale))
      basis.push_back(Element::from_coords(f.dom(), svd.matrixV().col(j)));
  }
  return Equaliser{SubalgebraView(f.dom(), std::move(basis))};
}

EqualiserFactorization factor_through_equaliser(const Equaliser& eq, const LinearMap& d,
                                                const Tolerance& tol) {
  if (d.cod() != eq.view.parent())
    throw std::invalid_argument("factor_through_equaliser: codomain mismatch");
  const Matrix& basis = eq.view.basis_matrix();
  Eigen::CompleteOrthogonalDecomposition<Matrix> solver(basis);
  const Matrix h = solver.solve(d.coord_matrix());
  const Matrix recomposed = basis * h;
  const double residual = (recomposed - d.coord_matrix()).cwiseAbs().maxCoeff();
  Verdict verdict = tol.close(residual, 1.0)
                        ? Verdict::pass(residual)
                        : Verdict::fail(residual,
                                        {{"reason", "range of d leaves the equaliser"},
                                         {"residual", residual}});
  return EqualiserFactorization{
      LinearMap::from_coord_matrix(d.dom(), d.cod(), recomposed), h, verdict};
}

}  // namespace cstar
