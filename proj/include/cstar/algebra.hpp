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

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cstar/tolerance.hpp"
#include "cstar/verdict.hpp"

namespace cstar {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// A finite-dimensional C*-algebra, presented as a direct sum of full
/// complex matrix blocks M_{n_1} + ... + M_{n_K}. The empty block list is
/// the trivial algebra {0}. Value type; equality compares block structure.
class Algebra {
 public:
  Algebra() = default;
  explicit Algebra(std::vector<int> block_dims, std::string label = "");

  /// Shorthand for the commutative algebra C^n (n blocks of size 1).
  static Algebra scalars(int n, std::string label = "");
  /// Shorthand for a single full matrix block M_n.
  static Algebra full_matrix(int n, std::string label = "");

  const std::vector<int>& block_dims() const { return block_dims_; }
  int num_blocks() const { return static_cast<int>(block_dims_.size()); }
  int block_dim(int k) const { return block_dims_[static_cast<size_t>(k)]; }

  /// Linear dimension: sum of n_k^2. Length of coordinate vectors.
  int dim() const { return dim_; }
  /// Dimension of the faithful block-diagonal representation: sum of n_k.
  int rep_dim() const { return rep_dim_; }
  /// Offset of block k in the coordinate vector (block-major ordering).
  int coord_offset(int k) const { return coord_offsets_[static_cast<size_t>(k)]; }
  /// Offset of block k on the diagonal of the dense realization.
  int rep_offset(int k) const { return rep_offsets_[static_cast<size_t>(k)]; }

  bool trivial() const { return block_dims_.empty(); }
  bool commutative() const;

  const std::string& label() const { return label_; }

  bool operator==(const Algebra& other) const {
    return block_dims_ == other.block_dims_;
  }
  bool operator!=(const Algebra& other) const { return !(*this == other); }

  std::string describe() const;  // e.g. "M2 + C"

 private:
  std::vector<int> block_dims_;
  std::vector<int> coord_offsets_;
  std::vector<int> rep_offsets_;
  int dim_ = 0;
  int rep_dim_ = 0;
  std::string label_;
};

/// An element of an Algebra: one complex matrix per block. Immutable value
/// type; all arithmetic goes through the free functions and operators below.
class Element {
 public:
  Element(Algebra parent, std::vector<Matrix> blocks);

  /// Element with all blocks zero.
  static Element zero(const Algebra& a);
  /// The multiplicative unit (identity matrix in every block).
  static Element unit(const Algebra& a);
  /// Reassemble an element from its coordinate vector in the matrix-unit
  /// basis (block-major, row-major within each block).
  static Element from_coords(const Algebra& a, const Vector& coords);
  /// Single-block convenience constructor for one-block algebras.
  static Element from_matrix(const Algebra& a, const Matrix& m);

  const Algebra& parent() const { return parent_; }
  const Matrix& block(int k) const { return blocks_[static_cast<size_t>(k)]; }
  const std::vector<Matrix>& blocks() const { return blocks_; }

  /// Coordinates in the matrix-unit basis, block-major and row-major.
  Vector coords() const;
  /// Dense block-diagonal realization (rep_dim x rep_dim).
  Matrix dense() const;
  /// Dense realization with the blocks laid out in the given order; used to
  /// compare norms across different faithful representations.
  Matrix dense_permuted(const std::vector<int>& block_order) const;

  /// The scalar value of an element of a one-dimensional algebra.
  Complex scalar() const;

 private:
  Algebra parent_;
  std::vector<Matrix> blocks_;
};

// ---------------------------------------------------------------------------
// *-algebra operations (blockwise)

Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element mul(const Element& a, const Element& b);
Element scale(Complex lambda, const Element& a);
Element star(const Element& a);

inline Element operator+(const Element& a, const Element& b) { return add(a, b); }
inline Element operator-(const Element& a, const Element& b) { return sub(a, b); }
inline Element operator*(const Element& a, const Element& b) { return mul(a, b); }
inline Element operator*(Complex lambda, const Element& a) { return scale(lambda, a); }
inline Element operator*(double lambda, const Element& a) {
  return scale(Complex(lambda, 0.0), a);
}
inline Element operator-(const Element& a) { return scale(Complex(-1.0, 0.0), a); }

/// Self-adjoint part (a + a*)/2.
Element real_part(const Element& a);
/// Self-adjoint part (a - a*)/(2i).
Element imag_part(const Element& a);

// ---------------------------------------------------------------------------
// Norm, order and spectrum

/// Operator norm: the maximum over blocks of the largest singular value.
/// Zero for elements of the trivial algebra.
double operator_norm(const Element& a);

/// Distance in operator norm.
double distance(const Element& a, const Element& b);

/// Max deviation from self-adjointness, ||a - a*||.
double self_adjoint_defect(const Element& a);
/// Max deviation from normality, ||a*a - aa*||.
double normality_defect(const Element& a);

bool is_self_adjoint(const Element& a, const Tolerance& tol = {});

/// One eigenvalue of a normal element, tagged with the block it came from.
struct SpectralPoint {
  Complex value;
  int block = 0;
};

/// Eigenvalue multiset of a normal element, each value tagged with its block
/// index. Throws std::invalid_argument for non-normal input.
std::vector<SpectralPoint> spectrum(const Element& a, const Tolerance& tol = {});

/// Pass iff a is self-adjoint within tol and its minimal eigenvalue is at
/// least -tol.abs * (1 + ||a||). The margin is the minimal eigenvalue; a
/// failing verdict carries the offending eigenvalue and block.
Verdict is_positive_element(const Element& a, const Tolerance& tol = {});

/// The order relation a <= b, decided as positivity of b - a.
Verdict leq(const Element& a, const Element& b, const Tolerance& tol = {});

/// Decomposition c = c1 - c2 + i c3 - i c4 into four positive elements,
/// built from the positive/negative spectral parts of the self-adjoint real
/// and imaginary parts of c. Satisfies c1 c2 = 0 and c3 c4 = 0.
struct JordanParts {
  Element pos_re, neg_re, pos_im, neg_im;

  Element reassemble() const;
};
JordanParts jordan_decompose(const Element& c);

/// The smallest lambda with -lambda * 1 <= v <= lambda * 1 for self-adjoint
/// v, i.e. the spectral radius. Throws for non-self-adjoint input.
double order_unit_norm(const Element& v, const Tolerance& tol = {});

// ---------------------------------------------------------------------------
// Internal numeric helpers shared across modules

namespace detail {
/// Largest singular value of a complex matrix (0 for empty matrices).
double matrix_operator_norm(const Matrix& m);
/// Eigenvalues of a Hermitian matrix, ascending.
Eigen::VectorXd hermitian_eigenvalues(const Matrix& m);
/// Positive spectral part of a Hermitian matrix: sum of lambda_j P_j over
/// eigenvalues lambda_j > 0.
Matrix positive_spectral_part(const Matrix& m);
}  // namespace detail

}  // namespace cstar
