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

#include "cstar/algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace cstar {

Algebra::Algebra(std::vector<int> block_dims, std::string label)
    : block_dims_(std::move(block_dims)), label_(std::move(label)) {
  coord_offsets_.reserve(block_dims_.size());
  rep_offsets_.reserve(block_dims_.size());
  for (int n : block_dims_) {
    if (n < 1) throw std::invalid_argument("Algebra: block dimensions must be >= 1");
    coord_offsets_.push_back(dim_);
    rep_offsets_.push_back(rep_dim_);
    dim_ += n * n;
    rep_dim_ += n;
  }
}

Algebra Algebra::scalars(int n, std::string label) {
  return Algebra(std::vector<int>(static_cast<size_t>(n), 1), std::move(label));
}

Algebra Algebra::full_matrix(int n, std::string label) {
  return Algebra({n}, std::move(label));
}

bool Algebra::commutative() const {
  return std::all_of(block_dims_.begin(), block_dims_.end(),
                     [](int n) { return n == 1; });
}

std::string Algebra::describe() const {
  if (trivial()) return "0";
  std::string out;
  int scalar_run = 0;
  auto flush = [&] {
    if (scalar_run == 0) return;
    if (!out.empty()) out += " + ";
    out += scalar_run == 1 ? "C" : "C^" + std::to_string(scalar_run);
    scalar_run = 0;
  };
  for (int n : block_dims_) {
    if (n == 1) {
      ++scalar_run;
      continue;
    }
    flush();
    if (!out.empty()) out += " + ";
    out += "M" + std::to_string(n);
  }
  flush();
  return out;
}

Element::Element(Algebra parent, std::vector<Matrix> blocks)
    : parent_(std::move(parent)), blocks_(std::move(blocks)) {
  if (static_cast<int>(blocks_.size()) != parent_.num_blocks())
    throw std::invalid_argument("Element: block count mismatch");
  for (int k = 0; k < parent_.num_blocks(); ++k) {
    const Matrix& m = blocks_[static_cast<size_t>(k)];
    if (m.rows() != parent_.block_dim(k) || m.cols() != parent_.block_dim(k))
      throw std::invalid_argument("Element: block shape mismatch");
  }
}

Element Element::zero(const Algebra& a) {
  std::vector<Matrix> blocks;
  blocks.reserve(static_cast<size_t>(a.num_blocks()));
  for (int n : a.block_dims()) blocks.push_back(Matrix::Zero(n, n));
  return Element(a, std::move(blocks));
}

Element Element::unit(const Algebra& a) {
  std::vector<Matrix> blocks;
  blocks.reserve(static_cast<size_t>(a.num_blocks()));
  for (int n : a.block_dims()) blocks.push_back(Matrix::Identity(n, n));
  return Element(a, std::move(blocks));
}

Element Element::from_coords(const Algebra& a, const Vector& coords) {
  if (coords.size() != a.dim())
    throw std::invalid_argument("Element::from_coords: length mismatch");
  std::vector<Matrix> blocks;
  blocks.reserve(static_cast<size_t>(a.num_blocks()));
  for (int k = 0; k < a.num_blocks(); ++k) {
    const int n = a.block_dim(k);
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = coords(a.coord_offset(k) + i * n + j);
    blocks.push_back(std::move(m));
  }
  return Element(a, std::move(blocks));
}

Element Element::from_matrix(const Algebra& a, const Matrix& m) {
  if (a.num_blocks() != 1)
    throw std::invalid_argument("Element::from_matrix: algebra is not one block");
  return Element(a, {m});
}

Vector Element::coords() const {
  Vector v(parent_.dim());
  for (int k = 0; k < parent_.num_blocks(); ++k) {
    const int n = parent_.block_dim(k);
    const Matrix& m = blocks_[static_cast<size_t>(k)];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v(parent_.coord_offset(k) + i * n + j) = m(i, j);
  }
  return v;
}

Matrix Element::dense() const {
  Matrix out = Matrix::Zero(parent_.rep_dim(), parent_.rep_dim());
  for (int k = 0; k < parent_.num_blocks(); ++k) {
    const int n = parent_.block_dim(k);
    out.block(parent_.rep_offset(k), parent_.rep_offset(k), n, n) =
        blocks_[static_cast<size_t>(k)];
  }
  return out;
}

Matrix Element::dense_permuted(const std::vector<int>& block_order) const {
  if (static_cast<int>(block_order.size()) != parent_.num_blocks())
    throw std::invalid_argument("dense_permuted: permutation length mismatch");
  Matrix out = Matrix::Zero(parent_.rep_dim(), parent_.rep_dim());
  int offset = 0;
  for (int k : block_order) {
    const int n = parent_.block_dim(k);
    out.block(offset, offset, n, n) = blocks_[static_cast<size_t>(k)];
    offset += n;
  }
  return out;
}

Complex Element::scalar() const {
  if (parent_.dim() != 1)
    throw std::invalid_argument("Element::scalar: algebra is not one-dimensional");
  return blocks_[0](0, 0);
}

namespace {

void require_same_parent(const Element& a, const Element& b, const char* op) {
  if (a.parent() != b.parent())
    throw std::invalid_argument(std::string(op) + ": parent algebra mismatch");
}

template <typename F>
Element blockwise(const Element& a, const Element& b, F&& f) {
  std::vector<Matrix> blocks;
  blocks.reserve(a.blocks().size());
  for (size_t k = 0; k < a.blocks().size(); ++k) blocks.push_back(f(a.blocks()[k], b.blocks()[k]));
  return Element(a.parent(), std::move(blocks));
}

template <typename F>
Element blockwise(const Element& a, F&& f) {
  std::vector<Matrix> blocks;
  blocks.reserve(a.blocks().size());
  for (const Matrix& m : a.blocks()) blocks.push_back(f(m));
  return Element(a.parent(), std::move(blocks));
}

}  // namespace

Element add(const Element& a, const Element& b) {
  require_same_parent(a, b, "add");
  return blockwise(a, b, [](const Matrix& x, const Matrix& y) -> Matrix { return x + y; });
}

Element sub(const Element& a, const Element& b) {
  require_same_parent(a, b, "sub");
  return blockwise(a, b, [](const Matrix& x, const Matrix& y) -> Matrix { return x - y; });
}

Element mul(const Element& a, const Element& b) {
  require_same_parent(a, b, "mul");
  return blockwise(a, b, [](const Matrix& x, const Matrix& y) -> Matrix { return x * y; });
}

Element scale(Complex lambda, const Element& a) {
  return blockwise(a, [lambda](const Matrix& m) -> Matrix { return lambda * m; });
}

Element star(const Element& a) {
  return blockwise(a, [](const Matrix& m) -> Matrix { return m.adjoint(); });
}

Element real_part(const Element& a) { return scale(Complex(0.5, 0.0), add(a, star(a))); }

Element imag_part(const Element& a) {
  // (a - a*) / (2i)
  return scale(Complex(0.0, -0.5), sub(a, star(a)));
}

namespace detail {

double matrix_operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
}

Eigen::VectorXd hermitian_eigenvalues(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

Matrix positive_spectral_part(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  const Eigen::VectorXd vals = solver.eigenvalues();
  const Matrix vecs = solver.eigenvectors();
  Matrix out = Matrix::Zero(m.rows(), m.cols());
  for (int j = 0; j < vals.size(); ++j) {
    if (vals(j) > 0.0)
      out += vals(j) * vecs.col(j) * vecs.col(j).adjoint();
  }
  return out;
}

}  // namespace detail

double operator_norm(const Element& a) {
  double norm = 0.0;
  for (const Matrix& m : a.blocks()) norm = std::max(norm, detail::matrix_operator_norm(m));
  return norm;
}

double distance(const Element& a, const Element& b) { return operator_norm(sub(a, b)); }

double self_adjoint_defect(const Element& a) { return distance(a, star(a)); }

double normality_defect(const Element& a) {
  return distance(mul(star(a), a), mul(a, star(a)));
}

bool is_self_adjoint(const Element& a, const Tolerance& tol) {
  return tol.close(self_adjoint_defect(a), 1.0 + operator_norm(a));
}

std::vector<SpectralPoint> spectrum(const Element& a, const Tolerance& tol) {
  const double scale = 1.0 + operator_norm(a);
  if (!tol.close(normality_defect(a), scale))
    throw std::invalid_argument("spectrum: element is not normal");
  std::vector<SpectralPoint> points;
  points.reserve(static_cast<size_t>(a.parent().rep_dim()));
  for (int k = 0; k < a.parent().num_blocks(); ++k) {
    const Matrix& m = a.block(k);
    if (tol.close(detail::matrix_operator_norm(m - m.adjoint()), scale)) {
      // Hermitian path: better conditioned and keeps eigenvalues real.
      const Eigen::VectorXd vals = detail::hermitian_eigenvalues((m + m.adjoint()) / 2.0);
      for (int j = 0; j < vals.size(); ++j) points.push_back({Complex(vals(j), 0.0), k});
    } else {
      Eigen::ComplexEigenSolver<Matrix> solver(m, /*computeEigenvectors=*/false);
      for (int j = 0; j < solver.eigenvalues().size(); ++j)
        points.push_back({solver.eigenvalues()(j), k});
    }
  }
  return points;
}

Verdict is_positive_element(const Element& a, const Tolerance& tol) {
  const double norm = operator_norm(a);
  const double sa_defect = self_adjoint_defect(a);
  if (!tol.close(sa_defect, 1.0 + norm)) {
    return Verdict::fail(-sa_defect, {{"reason", "not self-adjoint"},
                                      {"self_adjoint_defect", sa_defect}});
  }
  // Hermitian eigenvalues of a PSD matrix may come out slightly negative in
  // floating point, hence the -tol slack.
  double min_eig = 0.0;
  int min_block = -1;
  bool first = true;
  for (int k = 0; k < a.parent().num_blocks(); ++k) {
    const Matrix h = (a.block(k) + a.block(k).adjoint()) / 2.0;
    const Eigen::VectorXd vals = detail::hermitian_eigenvalues(h);
    if (vals.size() == 0) continue;
    if (first || vals(0) < min_eig) {
      min_eig = vals(0);
      min_block = k;
      first = false;
    }
  }
  if (first) return Verdict::pass(0.0, "trivial algebra");
  if (min_eig >= -tol.abs * (1.0 + norm)) return Verdict::pass(min_eig);
  return Verdict::fail(min_eig, {{"eigenvalue", min_eig}, {"block", min_block}});
}

Verdict leq(const Element& a, const Element& b, const Tolerance& tol) {
  require_same_parent(a, b, "leq");
  return is_positive_element(sub(b, a), tol);
}

Element JordanParts::reassemble() const {
  return add(sub(pos_re, neg_re),
             scale(Complex(0.0, 1.0), sub(pos_im, neg_im)));
}

JordanParts jordan_decompose(const Element& c) {
  const Element re = real_part(c);
  const Element im = imag_part(c);
  auto split = [](const Element& h) {
    std::vector<Matrix> pos, neg;
    pos.reserve(h.blocks().size());
    neg.reserve(h.blocks().size());
    for (const Matrix& m : h.blocks()) {
      const Matrix hermitian = (m + m.adjoint()) / 2.0;
      Matrix plus = detail::positive_spectral_part(hermitian);
      Matrix minus = detail::positive_spectral_part(-hermitian);
      pos.push_back(std::move(plus));
      neg.push_back(std::move(minus));
    }
    return std::pair<Element, Element>{Element(h.parent(), std::move(pos)),
                                       Element(h.parent(), std::move(neg))};
  };
  auto [re_pos, re_neg] = split(re);
  auto [im_pos, im_neg] = split(im);
  return JordanParts{std::move(re_pos), std::move(re_neg), std::move(im_pos),
                     std::move(im_neg)};
}

double order_unit_norm(const Element& v, const Tolerance& tol) {
  if (!is_self_adjoint(v, tol))
    throw std::invalid_argument("order_unit_norm: element is not self-adjoint");
  // Smallest lambda with -lambda*1 <= v <= lambda*1 is the spectral radius.
  double radius = 0.0;
  for (const Matrix& m : v.blocks()) {
    const Eigen::VectorXd vals = detail::hermitian_eigenvalues((m + m.adjoint()) / 2.0);
    for (int j = 0; j < vals.size(); ++j) radius = std::max(radius, std::abs(vals(j)));
  }
  return radius;
}

}  // namespace cstar
