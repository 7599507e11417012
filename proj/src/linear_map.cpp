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

#include "cstar/linear_map.hpp"

#include <stdexcept>

namespace cstar {

int matrix_unit_index(const Algebra& a, int block, int i, int j) {
  const int n = a.block_dim(block);
  if (i < 0 || j < 0 || i >= n || j >= n)
    throw std::invalid_argument("matrix_unit_index: entry out of range");
  return a.coord_offset(block) + i * n + j;
}

Element matrix_unit(const Algebra& a, int block, int i, int j) {
  Vector coords = Vector::Zero(a.dim());
  coords(matrix_unit_index(a, block, i, j)) = Complex(1.0, 0.0);
  return Element::from_coords(a, coords);
}

LinearMap::LinearMap(Algebra dom, Algebra cod, std::vector<Element> basis_images)
    : dom_(std::move(dom)), cod_(std::move(cod)), basis_images_(std::move(basis_images)) {
  if (static_cast<int>(basis_images_.size()) != dom_.dim())
    throw std::invalid_argument("LinearMap: need one image per matrix-unit basis element");
  coord_matrix_.resize(cod_.dim(), dom_.dim());
  for (int p = 0; p < dom_.dim(); ++p) {
    const Element& image = basis_images_[static_cast<size_t>(p)];
    if (image.parent() != cod_)
      throw std::invalid_argument("LinearMap: basis image not in the codomain");
    coord_matrix_.col(p) = image.coords();
  }
}

LinearMap LinearMap::identity(const Algebra& a) {
  return from_coord_matrix(a, a, Matrix::Identity(a.dim(), a.dim()));
}

LinearMap LinearMap::from_coord_matrix(Algebra dom, Algebra cod, const Matrix& m) {
  if (m.rows() != cod.dim() || m.cols() != dom.dim())
    throw std::invalid_argument("LinearMap::from_coord_matrix: shape mismatch");
  std::vector<Element> images;
  images.reserve(static_cast<size_t>(dom.dim()));
  for (int p = 0; p < dom.dim(); ++p) images.push_back(Element::from_coords(cod, m.col(p)));
  return LinearMap(std::move(dom), std::move(cod), std::move(images));
}

Element LinearMap::operator()(const Element& a) const {
  if (a.parent() != dom_)
    throw std::invalid_argument("LinearMap: argument not in the domain");
  return Element::from_coords(cod_, coord_matrix_ * a.coords());
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
  if (f.cod() != g.dom())
    throw std::invalid_argument("compose: cod(f) != dom(g)");
  return LinearMap::from_coord_matrix(f.dom(), g.cod(),
                                      g.coord_matrix() * f.coord_matrix());
}

double map_distance(const LinearMap& f, const LinearMap& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod())
    throw std::invalid_argument("map_distance: shape mismatch");
  return (f.coord_matrix() - g.coord_matrix()).cwiseAbs().maxCoeff();
}

LinearMap transpose_map(const Algebra& a) {
  std::vector<Element> images;
  images.reserve(static_cast<size_t>(a.dim()));
  for (int k = 0; k < a.num_blocks(); ++k)
    for (int i = 0; i < a.block_dim(k); ++i)
      for (int j = 0; j < a.block_dim(k); ++j) images.push_back(matrix_unit(a, k, j, i));
  return LinearMap(a, a, std::move(images));
}

LinearMap unitary_conjugation(const Algebra& a, const std::vector<Matrix>& unitaries) {
  if (static_cast<int>(unitaries.size()) != a.num_blocks())
    throw std::invalid_argument("unitary_conjugation: one unitary per block required");
  std::vector<Element> images;
  images.reserve(static_cast<size_t>(a.dim()));
  for (int k = 0; k < a.num_blocks(); ++k) {
    const Matrix& u = unitaries[static_cast<size_t>(k)];
    const int n = a.block_dim(k);
    if (u.rows() != n || u.cols() != n)
      throw std::invalid_argument("unitary_conjugation: unitary shape mismatch");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::vector<Matrix> blocks;
        for (int l = 0; l < a.num_blocks(); ++l)
          blocks.push_back(Matrix::Zero(a.block_dim(l), a.block_dim(l)));
        Matrix unit = Matrix::Zero(n, n);
        unit(i, j) = Complex(1.0, 0.0);
        blocks[static_cast<size_t>(k)] = u.adjoint() * unit * u;
        images.push_back(Element(a, std::move(blocks)));
      }
  }
  return LinearMap(a, a, std::move(images));
}

LinearMap unitization(const Algebra& a) {
  return LinearMap(Algebra::scalars(1), a, {Element::unit(a)});
}

LinearMap depolarizing_channel(int n, double mix) {
  const Algebra a = Algebra::full_matrix(n);
  std::vector<Element> images;
  images.reserve(static_cast<size_t>(a.dim()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix m = Matrix::Zero(n, n);
      m(i, j) = Complex(1.0 - mix, 0.0);
      if (i == j) m += (mix / n) * Matrix::Identity(n, n);
      images.push_back(Element::from_matrix(a, m));
    }
  return LinearMap(a, a, std::move(images));
}

LinearMap pinching_map(const Algebra& a) {
  Matrix action = Matrix::Zero(a.dim(), a.dim());
  for (int k = 0; k < a.num_blocks(); ++k)
    for (int i = 0; i < a.block_dim(k); ++i) {
      const int p = matrix_unit_index(a, k, i, i);
      action(p, p) = Complex(1.0, 0.0);
    }
  return LinearMap::from_coord_matrix(a, a, action);
}

LinearMap block_embedding(const Algebra& dom, const Algebra& cod,
                          const std::vector<std::vector<int>>& multiplicities) {
  if (static_cast<int>(multiplicities.size()) != cod.num_blocks())
    throw std::invalid_argument("block_embedding: one multiplicity row per codomain block");
  for (int l = 0; l < cod.num_blocks(); ++l) {
    const auto& row = multiplicities[static_cast<size_t>(l)];
    if (static_cast<int>(row.size()) != dom.num_blocks())
      throw std::invalid_argument("block_embedding: multiplicity row length mismatch");
    int covered = 0;
    for (int k = 0; k < dom.num_blocks(); ++k) {
      if (row[static_cast<size_t>(k)] < 0)
        throw std::invalid_argument("block_embedding: negative multiplicity");
      covered += row[static_cast<size_t>(k)] * dom.block_dim(k);
    }
    if (covered != cod.block_dim(l))
      throw std::invalid_argument("block_embedding: multiplicities do not fill block " +
                                  std::to_string(l));
  }
  std::vector<Element> images;
  images.reserve(static_cast<size_t>(dom.dim()));
  for (int k = 0; k < dom.num_blocks(); ++k) {
    const int n = dom.block_dim(k);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::vector<Matrix> blocks;
        blocks.reserve(static_cast<size_t>(cod.num_blocks()));
        for (int l = 0; l < cod.num_blocks(); ++l) {
          Matrix m = Matrix::Zero(cod.block_dim(l), cod.block_dim(l));
          int offset = 0;
          for (int kk = 0; kk < dom.num_blocks(); ++kk)
            for (int copy = 0; copy < multiplicities[static_cast<size_t>(l)]
                                                    [static_cast<size_t>(kk)];
                 ++copy) {
              if (kk == k) m(offset + i, offset + j) = Complex(1.0, 0.0);
              offset += dom.block_dim(kk);
            }
          blocks.push_back(std::move(m));
        }
        images.push_back(Element(cod, std::move(blocks)));
      }
  }
  return LinearMap(dom, cod, std::move(images));
}

LinearMap trace_state(const Algebra& a, const Matrix& rho) {
  if (a.num_blocks() != 1 || rho.rows() != a.block_dim(0) || rho.cols() != a.block_dim(0))
    throw std::invalid_argument("trace_state: density matrix shape mismatch");
  const Algebra scalars = Algebra::scalars(1);
  std::vector<Element> images;
  const int n = a.block_dim(0);
  images.reserve(static_cast<size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // tr(rho E_ij) = rho(j, i)
      Matrix value(1, 1);
      value(0, 0) = rho(j, i);
      images.push_back(Element(scalars, {value}));
    }
  return LinearMap(a, scalars, std::move(images));
}

}  // namespace cstar
