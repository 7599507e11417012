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

#include "cstar/choi.hpp"

#include <algorithm>
#include <stdexcept>

namespace cstar {

std::vector<double> ChoiData::all_eigenvalues() const {
  std::vector<double> out;
  for (const Eigen::VectorXd& v : eigenvalues)
    for (int i = 0; i < v.size(); ++i) out.push_back(v(i));
  std::sort(out.begin(), out.end());
  return out;
}

ChoiData choi(const LinearMap& f) {
  const Algebra& dom = f.dom();
  const int m = f.cod().rep_dim();
  ChoiData data;
  bool first = true;
  for (int k = 0; k < dom.num_blocks(); ++k) {
    const int n = dom.block_dim(k);
    Matrix c = Matrix::Zero(n * m, n * m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        c.block(i * m, j * m, m, m) = f(matrix_unit(dom, k, i, j)).dense();
    data.hermiticity_defect = std::max(
        data.hermiticity_defect, detail::matrix_operator_norm(c - c.adjoint()));
    Eigen::VectorXd vals = detail::hermitian_eigenvalues((c + c.adjoint()) / 2.0);
    if (vals.size() > 0 && (first || vals(0) < data.min_eigenvalue)) {
      data.min_eigenvalue = vals(0);
      first = false;
    }
    data.blocks.push_back(std::move(c));
    data.eigenvalues.push_back(std::move(vals));
  }
  return data;
}

Verdict check_completely_positive(const LinearMap& f, const Tolerance& tol) {
  const ChoiData data = choi(f);
  if (!tol.close(data.hermiticity_defect, 1.0))
    return Verdict::fail(-data.hermiticity_defect,
                         {{"reason", "Choi matrix not Hermitian"},
                          {"defect", data.hermiticity_defect}});
  for (size_t k = 0; k < data.eigenvalues.size(); ++k) {
    const Eigen::VectorXd& vals = data.eigenvalues[k];
    if (vals.size() > 0 && vals(0) < -tol.abs * (1.0 + std::abs(vals(vals.size() - 1)))) {
      return Verdict::fail(vals(0), {{"domain_block", k}, {"min_eigenvalue", vals(0)}});
    }
  }
  return Verdict::pass(data.min_eigenvalue);
}

LinearMap amplify(const LinearMap& f, int m) {
  if (m < 1) throw std::invalid_argument("amplify: level must be >= 1");
  if (m == 1) return f;
  const Algebra& dom = f.dom();
  const Algebra& cod = f.cod();
  std::vector<int> amp_dom_dims, amp_cod_dims;
  for (int n : dom.block_dims()) amp_dom_dims.push_back(m * n);
  for (int n : cod.block_dims()) amp_cod_dims.push_back(m * n);
  const Algebra amp_dom(amp_dom_dims);
  const Algebra amp_cod(amp_cod_dims);

  // Basis unit E_{(r,i),(s,j)} of the amplified block k (layer (r,s) of the
  // m x m matrix, entry (i,j) inside the original block) maps to f(E_ij)
  // placed in layer (r,s) of each amplified codomain block.
  std::vector<Element> images;
  images.reserve(static_cast<size_t>(amp_dom.dim()));
  for (int k = 0; k < dom.num_blocks(); ++k) {
    const int n = dom.block_dim(k);
    for (int row = 0; row < m * n; ++row)
      for (int col = 0; col < m * n; ++col) {
        const int r = row / n, i = row % n;
        const int s = col / n, j = col % n;
        const Element image = f(matrix_unit(dom, k, i, j));
        std::vector<Matrix> blocks;
        blocks.reserve(static_cast<size_t>(cod.num_blocks()));
        for (int l = 0; l < cod.num_blocks(); ++l) {
          const int b = cod.block_dim(l);
          Matrix big = Matrix::Zero(m * b, m * b);
          big.block(r * b, s * b, b, b) = image.block(l);
          blocks.push_back(std::move(big));
        }
        images.push_back(Element(amp_cod, std::move(blocks)));
      }
  }
  return LinearMap(amp_dom, amp_cod, std::move(images));
}

double matrix_norm_over_algebra(const std::vector<std::vector<Element>>& entries,
                                const std::optional<std::vector<int>>& block_order) {
  const size_t m = entries.size();
  if (m == 0) return 0.0;
  const Algebra& a = entries[0][0].parent();
  for (const auto& row : entries) {
    if (row.size() != m)
      throw std::invalid_argument("matrix_norm_over_algebra: matrix is not square");
    for (const Element& e : row)
      if (e.parent() != a)
        throw std::invalid_argument("matrix_norm_over_algebra: mixed parent algebras");
  }
  const int d = a.rep_dim();
  Matrix realized(static_cast<Eigen::Index>(m) * d, static_cast<Eigen::Index>(m) * d);
  for (size_t r = 0; r < m; ++r)
    for (size_t s = 0; s < m; ++s)
      realized.block(static_cast<Eigen::Index>(r) * d, static_cast<Eigen::Index>(s) * d,
                     d, d) =
          block_order ? entries[r][s].dense_permuted(*block_order)
                      : entries[r][s].dense();
  return detail::matrix_operator_norm(realized);
}

}  // namespace cstar
