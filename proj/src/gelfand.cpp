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

#include "cstar/gelfand.hpp"

#include <stdexcept>

#include "cstar/classify.hpp"
#include "cstar/json_io.hpp"

namespace cstar {

std::vector<Character> characters(const Algebra& a) {
  if (!a.commutative())
    throw std::invalid_argument("characters: algebra is not commutative");
  const Algebra scalars = Algebra::scalars(1);
  std::vector<Character> out;
  out.reserve(static_cast<size_t>(a.num_blocks()));
  for (int k = 0; k < a.num_blocks(); ++k) {
    std::vector<Element> images;
    images.reserve(static_cast<size_t>(a.dim()));
    for (int j = 0; j < a.num_blocks(); ++j) {
      Matrix value(1, 1);
      value(0, 0) = j == k ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
      images.push_back(Element(scalars, {value}));
    }
    out.push_back(Character{LinearMap(a, scalars, std::move(images)), k});
  }
  return out;
}

LinearMap gelfand_transform(const Algebra& a) {
  const std::vector<Character> chars = characters(a);
  const Algebra table = Algebra::scalars(static_cast<int>(chars.size()));
  Matrix action(table.dim(), a.dim());
  for (size_t w = 0; w < chars.size(); ++w)
    action.row(static_cast<Eigen::Index>(w)) =
        chars[w].functional.coord_matrix().row(0);
  return LinearMap::from_coord_matrix(a, table, action);
}

Element functional_calculus(const Element& a, const Polynomial& p, const Tolerance& tol) {
  if (!is_self_adjoint(a, tol))
    throw std::invalid_argument("functional_calculus: element is not self-adjoint");
  std::vector<Matrix> blocks;
  blocks.reserve(a.blocks().size());
  for (const Matrix& m : a.blocks()) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver((m + m.adjoint()) / 2.0);
    const Eigen::VectorXd vals = solver.eigenvalues();
    for (int j = 0; j < vals.size(); ++j)
      if (vals(j) < -tol.bound(1.0) || vals(j) > 1.0 + tol.bound(1.0))
        throw std::invalid_argument(
            "functional_calculus: spectrum leaves [0, 1] (eigenvalue " +
            std::to_string(vals(j)) + ")");
    Vector mapped(vals.size());
    for (int j = 0; j < vals.size(); ++j) mapped(j) = p(Complex(vals(j), 0.0));
    blocks.push_back(solver.eigenvectors() * mapped.asDiagonal() *
                     solver.eigenvectors().adjoint());
  }
  return Element(a.parent(), std::move(blocks));
}

Polynomial rho_c2(Complex lambda, Complex mu) {
  // lambda x + mu (1 - x) = mu + (lambda - mu) x
  return Polynomial({mu, lambda - mu});
}

C2Factorization c2_factorization(const LinearMap& sigma, int degree_bound,
                                 const Tolerance& tol) {
  if (sigma.dom() != Algebra::scalars(2))
    throw std::invalid_argument("c2_factorization: domain must be C^2");
  if (!check_unital(sigma, tol).passed || !check_positive(sigma, 0, 0, tol).passed)
    throw std::invalid_argument("c2_factorization: sigma is not PU");

  const Element a = sigma(matrix_unit(sigma.dom(), 0, 0, 0));
  C2Factorization out{a, Verdict{}};

  double worst = 0.0;
  nlohmann::json witness;
  auto track = [&](double r, const char* kind, nlohmann::json detail) {
    if (r > worst) {
      worst = r;
      detail["check"] = kind;
      witness = std::move(detail);
    }
  };

  // sigma factors through the polynomial action: sigma_bar(rho(l, m)) must
  // reproduce sigma(l, m) on a grid of coefficients.
  const std::vector<double> grid{-1.0, -0.5, 0.0, 0.5, 1.0};
  for (double l : grid)
    for (double m : grid) {
      Vector coords(2);
      coords << Complex(l, 0.0), Complex(m, 0.0);
      const Element direct = sigma(Element::from_coords(sigma.dom(), coords));
      const Element factored = out.apply(rho_c2(l, m), tol);
      track(distance(direct, factored), "grid", {{"lambda", l}, {"mu", m}});
    }

  // Multiplicativity on monomial pairs up to the degree bound.
  std::vector<Element> powers;
  powers.reserve(static_cast<size_t>(2 * degree_bound) + 1);
  for (int d = 0; d <= 2 * degree_bound; ++d)
    powers.push_back(out.apply(Polynomial::monomial(d), tol));
  for (int i = 0; i <= degree_bound; ++i)
    for (int j = 0; j <= degree_bound; ++j) {
      const double r = distance(powers[static_cast<size_t>(i + j)],
                                mul(powers[static_cast<size_t>(i)],
                                    powers[static_cast<size_t>(j)]));
      track(r, "multiplicative", {{"i", i}, {"j", j}});
    }

  // Involution and unit.
  const Polynomial probe({Complex(0.3, 0.4), Complex(-1.0, 0.25), Complex(0.0, 1.0)});
  track(distance(out.apply(probe.conjugate(), tol), star(out.apply(probe, tol))),
        "involutive", {});
  track(distance(powers[0], Element::unit(sigma.cod())), "unital", {});

  const double scale = 1.0 + operator_norm(a);
  out.verdict = tol.close(worst, scale) ? Verdict::pass(worst)
                                        : Verdict::fail(worst, witness);
  return out;
}

bool C3Witness::all_passed() const {
  for (const NamedVerdict& nv : checks)
    if (!nv.verdict.passed) return false;
  return true;
}

nlohmann::json C3Witness::report() const {
  nlohmann::json j;
  j["a1"] = element_to_json(a1);
  j["a2"] = element_to_json(a2);
  j["a3"] = element_to_json(a3);
  j["f"] = map_to_json(f);
  j["commutator_norm"] = commutator_norm;
  nlohmann::json checks_json = nlohmann::json::object();
  for (const NamedVerdict& nv : checks) checks_json[nv.name] = verdict_to_json(nv.verdict);
  j["checks"] = std::move(checks_json);
  j["all_passed"] = all_passed();
  return j;
}

C3Witness c3_witness() {
  const Algebra m2 = Algebra::full_matrix(2);
  Matrix p1 = Matrix::Zero(2, 2);
  p1(1, 1) = Complex(1.0, 0.0);  // projection onto the second coordinate axis
  Matrix p_plus(2, 2);
  p_plus << Complex(0.5, 0.0), Complex(0.5, 0.0), Complex(0.5, 0.0), Complex(0.5, 0.0);

  const Element a1 = Element::from_matrix(m2, 0.5 * p1);
  const Element a2 = Element::from_matrix(m2, 0.5 * p_plus);
  const Element a3 = sub(Element::unit(m2), add(a1, a2));
  LinearMap f(Algebra::scalars(3), m2, {a1, a2, a3});

  C3Witness w{a1, a2, a3, f, 0.0, {}};
  w.commutator_norm = operator_norm(sub(mul(a1, a2), mul(a2, a1)));

  w.checks.push_back({"a1_positive", is_positive_element(a1)});
  w.checks.push_back({"a2_positive", is_positive_element(a2)});
  w.checks.push_back({"a3_positive", is_positive_element(a3)});

  // All entries are dyadic rationals, so the sum comes out bit-exact.
  const double sum_defect =
      distance(add(add(a1, a2), a3), Element::unit(m2));
  w.checks.push_back({"sums_to_unit",
                      sum_defect == 0.0
                          ? Verdict::pass(0.0, "exact")
                          : Verdict::fail(sum_defect, {{"defect", sum_defect}})});

  w.checks.push_back(
      {"noncommuting", w.commutator_norm > 0.1
                           ? Verdict::pass(w.commutator_norm)
                           : Verdict::fail(w.commutator_norm)});
  w.checks.push_back({"f_unital", check_unital(f)});
  w.checks.push_back({"f_positive", check_positive(f)});
  Verdict not_multiplicative = check_multiplicative(f);
  // The map is the witness precisely because multiplicativity fails.
  w.checks.push_back(
      {"f_not_multiplicative",
       not_multiplicative.passed
           ? Verdict::fail(not_multiplicative.margin, nullptr,
                           "expected multiplicativity to fail")
           : Verdict::pass(not_multiplicative.margin,
                           "multiplicativity fails as required; witness pair kept")});
  return w;
}

}  // namespace cstar
