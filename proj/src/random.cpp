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

#include "cstar/random.hpp"

#include <Eigen/QR>

#include "cstar/linear_map.hpp"

namespace cstar {

Matrix random_ginibre(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
  return m;
}

Matrix random_unitary(int n, Rng& rng) {
  const Matrix g = random_ginibre(n, n, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase convention so the distribution is Haar.
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    q.col(j) *= std::abs(d) > 0.0 ? d / std::abs(d) : Complex(1.0, 0.0);
  }
  return q;
}

Element random_element(const Algebra& a, Rng& rng) {
  std::vector<Matrix> blocks;
  blocks.reserve(static_cast<size_t>(a.num_blocks()));
  for (int n : a.block_dims()) blocks.push_back(random_ginibre(n, n, rng));
  return Element(a, std::move(blocks));
}

Element random_self_adjoint(const Algebra& a, Rng& rng) {
  return real_part(random_element(a, rng));
}

Element random_positive(const Algebra& a, Rng& rng) {
  const Element g = random_element(a, rng);
  return mul(star(g), g);
}

Element random_contraction_01(const Algebra& a, Rng& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<Matrix> blocks;
  blocks.reserve(static_cast<size_t>(a.num_blocks()));
  for (int n : a.block_dims()) {
    const Matrix u = random_unitary(n, rng);
    Eigen::VectorXd eigs(n);
    for (int i = 0; i < n; ++i) eigs(i) = unif(rng);
    blocks.push_back(u * eigs.cast<Complex>().asDiagonal() * u.adjoint());
  }
  return Element(a, std::move(blocks));
}

Matrix random_density(int n, Rng& rng) {
  const Matrix g = random_ginibre(n, n, rng);
  const Matrix p = g * g.adjoint();
  return p / p.trace().real();
}

LinearMap random_state(const Algebra& a, Rng& rng) {
  // Dirichlet(1, ..., 1) weights across blocks.
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> weights(static_cast<size_t>(a.num_blocks()));
  double total = 0.0;
  for (double& w : weights) {
    w = expo(rng);
    total += w;
  }
  const Algebra scalars = Algebra::scalars(1);
  std::vector<Element> images;
  images.reserve(static_cast<size_t>(a.dim()));
  for (int k = 0; k < a.num_blocks(); ++k) {
    const int n = a.block_dim(k);
    const Matrix rho = random_density(n, rng) * (weights[static_cast<size_t>(k)] / total);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Matrix value(1, 1);
        value(0, 0) = rho(j, i);  // tr(rho E_ij)
        images.push_back(Element(scalars, {value}));
      }
  }
  return LinearMap(a, scalars, std::move(images));
}

namespace {

/// Random partition of the unit into m positive elements: normalizes
/// random positive q_k by s^{-1/2} (...) s^{-1/2} with s their sum.
std::vector<Element> random_positive_partition(const Algebra& a, int m, Rng& rng) {
  std::vector<Element> raw;
  raw.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    // A small multiple of the unit keeps the sum comfortably invertible.
    raw.push_back(add(random_positive(a, rng), scale(Complex(0.05, 0.0), Element::unit(a))));
  }
  Element total = Element::zero(a);
  for (const Element& q : raw) total = add(total, q);
  std::vector<Matrix> inv_sqrt_blocks;
  for (const Matrix& s : total.blocks()) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver((s + s.adjoint()) / 2.0);
    inv_sqrt_blocks.push_back(solver.operatorInverseSqrt());
  }
  const Element inv_sqrt(a, std::move(inv_sqrt_blocks));
  std::vector<Element> out;
  out.reserve(raw.size());
  for (const Element& q : raw) out.push_back(mul(inv_sqrt, mul(q, inv_sqrt)));
  return out;
}

}  // namespace

LinearMap random_pu_map(const Algebra& dom, const Algebra& cod, Rng& rng) {
  std::uniform_int_distribution<int> terms(1, 3);
  std::uniform_int_distribution<int> coin(0, 3);
  const int m = terms(rng);
  const std::vector<Element> partition = random_positive_partition(cod, m, rng);
  std::vector<LinearMap> functionals;
  functionals.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) functionals.push_back(random_state(dom, rng));

  // f(a) = sum_k phi_k(a) p_k: unital because the p_k sum to 1, positive
  // because every phi_k is positive and every p_k is PSD.
  Matrix action = Matrix::Zero(cod.dim(), dom.dim());
  for (int i = 0; i < m; ++i) {
    action += partition[static_cast<size_t>(i)].coords() *
              functionals[static_cast<size_t>(i)].coord_matrix();
  }
  LinearMap f = LinearMap::from_coord_matrix(dom, cod, action);

  if (dom == cod) {
    const int branch = coin(rng);
    if (branch == 0) {
      // Blend with a unitary conjugation; convex combinations stay PU.
      std::vector<Matrix> unitaries;
      for (int n : cod.block_dims()) unitaries.push_back(random_unitary(n, rng));
      const LinearMap conj = unitary_conjugation(cod, unitaries);
      std::uniform_real_distribution<double> unif(0.0, 1.0);
      const double t = unif(rng);
      f = LinearMap::from_coord_matrix(
          dom, cod, t * conj.coord_matrix() + (1.0 - t) * f.coord_matrix());
    } else if (branch == 1) {
      // Transposition keeps positivity and the unit but breaks complete
      // positivity, which broadens the sampled family.
      f = compose(transpose_map(cod), f);
    }
  }
  return f;
}

}  // namespace cstar
