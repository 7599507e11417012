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

// Hand-rolled numerical oracles for the tests. Deliberately independent of
// the library code paths they check: 2x2 eigenvalues come from the
// characteristic polynomial, products from explicit index loops.

#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace oracle {

using C = std::complex<double>;
using Mat2 = std::array<std::array<C, 2>, 2>;

inline Mat2 mul2(const Mat2& a, const Mat2& b) {
  Mat2 out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      C acc(0.0, 0.0);
      for (int k = 0; k < 2; ++k) acc += a[i][k] * b[k][j];
      out[i][j] = acc;
    }
  return out;
}

/// Eigenvalues of a 2x2 Hermitian matrix by the quadratic formula,
/// ascending.
inline std::array<double, 2> herm2_eigs(const Mat2& m) {
  const double tr = m[0][0].real() + m[1][1].real();
  const double det =
      (m[0][0] * m[1][1] - m[0][1] * m[1][0]).real();
  const double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
  return {tr / 2.0 - disc, tr / 2.0 + disc};
}

/// Largest singular value of a 2x2 complex matrix: sqrt of the largest
/// eigenvalue of a* a.
inline double op_norm2(const Mat2& m) {
  Mat2 adj{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) adj[i][j] = std::conj(m[j][i]);
  const auto eigs = herm2_eigs(mul2(adj, m));
  return std::sqrt(std::max(0.0, eigs[1]));
}

}  // namespace oracle
