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

#include "cstar/polynomial.hpp"

#include <stdexcept>

namespace cstar {

namespace {
void trim(std::vector<std::complex<double>>& coeffs) {
  while (!coeffs.empty() && coeffs.back() == std::complex<double>(0.0, 0.0))
    coeffs.pop_back();
}
}  // namespace

Polynomial::Polynomial(std::vector<std::complex<double>> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim(coeffs_);
}

Polynomial Polynomial::constant(std::complex<double> c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(int degree, std::complex<double> coefficient) {
  if (degree < 0) throw std::invalid_argument("Polynomial::monomial: negative degree");
  std::vector<std::complex<double>> coeffs(static_cast<size_t>(degree) + 1,
                                           std::complex<double>(0.0, 0.0));
  coeffs.back() = coefficient;
  return Polynomial(std::move(coeffs));
}

std::complex<double> Polynomial::operator()(std::complex<double> x) const {
  std::complex<double> acc(0.0, 0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::conjugate() const {
  std::vector<std::complex<double>> coeffs;
  coeffs.reserve(coeffs_.size());
  for (auto c : coeffs_) coeffs.push_back(std::conj(c));
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  std::vector<std::complex<double>> coeffs(std::max(coeffs_.size(), other.coeffs_.size()),
                                           std::complex<double>(0.0, 0.0));
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs[i] += coeffs_[i];
  for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs[i] += other.coeffs_[i];
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return *this + other * std::complex<double>(-1.0, 0.0);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (coeffs_.empty() || other.coeffs_.empty()) return Polynomial();
  std::vector<std::complex<double>> coeffs(coeffs_.size() + other.coeffs_.size() - 1,
                                           std::complex<double>(0.0, 0.0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < other.coeffs_.size(); ++j)
      coeffs[i + j] += coeffs_[i] * other.coeffs_[j];
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::operator*(std::complex<double> c) const {
  std::vector<std::complex<double>> coeffs;
  coeffs.reserve(coeffs_.size());
  for (auto x : coeffs_) coeffs.push_back(c * x);
  return Polynomial(std::move(coeffs));
}

}  // namespace cstar
