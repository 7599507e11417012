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

/// Index of the matrix unit E_ij of block k in the coordinate basis
/// (block-major, row-major within blocks).
int matrix_unit_index(const Algebra& a, int block, int i, int j);

/// The matrix unit E_ij of block k as an Element.
Element matrix_unit(const Algebra& a, int block, int i, int j);

/// A linear map between two algebras, stored by its action on the
/// matrix-unit basis of the domain. Linear by construction: apply expands
/// the argument in the basis and sums the stored images.
class LinearMap {
 public:
  LinearMap(Algebra dom, Algebra cod, std::vector<Element> basis_images);

  static LinearMap identity(const Algebra& a);
  /// Build from the coordinate action, a (cod dim) x (dom dim) matrix.
  static LinearMap from_coord_matrix(Algebra dom, Algebra cod, const Matrix& m);

  const Algebra& dom() const { return dom_; }
  const Algebra& cod() const { return cod_; }
  const std::vector<Element>& basis_images() const { return basis_images_; }
  /// Action on coordinate vectors; column p is the image of basis element p.
  const Matrix& coord_matrix() const { return coord_matrix_; }

  Element operator()(const Element& a) const;

 private:
  Algebra dom_, cod_;
  std::vector<Element> basis_images_;
  Matrix coord_matrix_;
};

inline LinearMap make_map(Algebra dom, Algebra cod, std::vector<Element> basis_images) {
  return LinearMap(std::move(dom), std::move(cod), std::move(basis_images));
}

inline Element apply(const LinearMap& f, const Element& a) { return f(a); }

/// g after f. Requires cod(f) == dom(g).
LinearMap compose(const LinearMap& g, const LinearMap& f);

inline LinearMap identity_map(const Algebra& a) { return LinearMap::identity(a); }

/// Max coordinate-level distance between two maps with equal dom and cod.
double map_distance(const LinearMap& f, const LinearMap& g);

// ---------------------------------------------------------------------------
// Stock maps used throughout the test fixtures and the CLI examples.

/// Blockwise transpose. Positive but not completely positive on blocks of
/// dimension >= 2.
LinearMap transpose_map(const Algebra& a);

/// a |-> u* a u with one unitary per block.
LinearMap unitary_conjugation(const Algebra& a, const std::vector<Matrix>& unitaries);

/// lambda |-> lambda * 1, the unique unital map from the scalars into a.
LinearMap unitization(const Algebra& a);

/// On M_n: a |-> (1 - mix) * a + mix * tr(a)/n * 1.
LinearMap depolarizing_channel(int n, double mix);

/// Blockwise restriction to the diagonal. Completely positive and unital
/// but not multiplicative on blocks of dimension >= 2.
LinearMap pinching_map(const Algebra& a);

/// The state a |-> tr(rho a) on a one-block algebra, as a map into C.
LinearMap trace_state(const Algebra& a, const Matrix& rho);

/// Unital *-homomorphism determined by block multiplicities:
/// multiplicities[l][k] copies of domain block k are stacked diagonally
/// (in block order) inside codomain block l. Requires the sizes to add up,
/// sum_k multiplicities[l][k] * n_k == m_l, which makes the map unital.
/// Identity, block permutations, diagonal embeddings and unitizations are
/// all instances.
LinearMap block_embedding(const Algebra& dom, const Algebra& cod,
                          const std::vector<std::vector<int>>& multiplicities);

}  // namespace cstar
