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
#include <vector>

namespace cstar {

/// Complex polynomial, coefficients stored lowest degree first with trailing
/// zeros trimmed. Evaluation uses Horner's scheme.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<std::complex<double>> coefficients);

  static Polynomial constant(std::complex<double> c);
  static Polynomial monomial(int degree, std::complex<double> coefficient = 1.0);

  const std::vector<std::complex<double>>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }

  std::complex<double> operator()(std::complex<double> x) const;

  /// The polynomial with conjugated coefficients; the involution of the
  /// polynomial function on real arguments.
  Polynomial conjugate() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(std::complex<double> c) const;

  bool operator==(const Polynomial& other) const { return coeffs_ == other.coeffs_; }

 private:
  std::vector<std::complex<double>> coeffs_;
};

}  // namespace cstar
