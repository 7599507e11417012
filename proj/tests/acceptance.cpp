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

// Acceptance suite: one line per criterion, each with its tolerance and
// runtime budget pinned in code. Exit status 0 iff every criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cstar/choi.hpp"
#include "cstar/classify.hpp"
#include "cstar/covariance.hpp"
#include "cstar/gelfand.hpp"
#include "cstar/instances.hpp"
#include "cstar/random.hpp"
#include "cstar/zoo.hpp"

using namespace cstar;

namespace {

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

bool check(bool condition, const std::string& message, std::string& detail) {
  if (!condition && detail.empty()) detail = message;
  return condition;
}

// --------------------------------------------------------------------------
// 1. Three-projection bundle.

bool criterion_c3(std::string& detail) {
  const C3Witness w = c3_witness();
  bool ok = true;
  for (const Element* a : {&w.a1, &w.a2, &w.a3}) {
    const Verdict v = is_positive_element(*a, Tolerance{1e-12, 0.0});
    ok &= check(v.passed && v.margin >= -1e-12, "a_i not positive at 1e-12", detail);
  }
  const Element sum = add(add(w.a1, w.a2), w.a3);
  ok &= check(distance(sum, Element::unit(w.a1.parent())) == 0.0,
              "a1 + a2 + a3 != 1 exactly", detail);
  ok &= check(std::abs(w.commutator_norm - 0.125) <= 1e-12,
              "commutator norm != 0.125 at 1e-12", detail);
  const Verdict pu = check_positive(w.f);
  ok &= check(pu.passed && pu.note == "exact (commutative domain)",
              "f not PU via the exact commutative path", detail);
  ok &= check(check_unital(w.f).passed, "f not unital", detail);
  const Verdict mult = check_multiplicative(w.f);
  ok &= check(!mult.passed && !mult.witness.is_null(),
              "multiplicativity failure lacks a witness", detail);
  return ok;
}

// --------------------------------------------------------------------------
// 2. Choi / complete positivity.

bool criterion_choi(std::string& detail) {
  bool ok = true;
  const Algebra m2 = Algebra::full_matrix(2);
  const std::vector<double> transpose_eigs = choi(transpose_map(m2)).all_eigenvalues();
  const std::vector<double> expected_t{-1.0, 1.0, 1.0, 1.0};
  for (size_t i = 0; i < 4; ++i)
    ok &= check(std::abs(transpose_eigs[i] - expected_t[i]) <= 1e-10,
                "transpose Choi eigenvalues off", detail);
  ok &= check(!check_completely_positive(transpose_map(m2)).passed,
              "transpose wrongly CP", detail);

  const std::vector<double> id_eigs = choi(identity_map(m2)).all_eigenvalues();
  const std::vector<double> expected_i{0.0, 0.0, 0.0, 2.0};
  for (size_t i = 0; i < 4; ++i)
    ok &= check(std::abs(id_eigs[i] - expected_i[i]) <= 1e-10,
                "identity Choi eigenvalues off", detail);
  ok &= check(check_completely_positive(identity_map(m2)).passed,
              "identity not CP", detail);

  const std::vector<ZooEntry> zoo = miu_zoo();
  ok &= check(zoo.size() == 20, "MIU zoo must have 20 maps", detail);
  for (const ZooEntry& entry : zoo)
    ok &= check(check_completely_positive(entry.map).passed,
                "MIU zoo map fails CP: " + entry.name, detail);
  return ok;
}

// --------------------------------------------------------------------------
// 3. Kleisli laws at size 2, plus the negative instance.

bool criterion_kleisli(std::string& detail) {
  bool ok = true;
  const cat::AdjunctionData powerset = cat::build_multimap_instance(2);
  const cat::KleisliData kl = cat::kleisli(cat::monad_data(powerset));
  ok &= check(kl.category->homs("{a,b}", "{a,b}").size() == 16,
              "expected 16 Kleisli morphisms at |X| = |Y| = 2", detail);

  for (const NamedVerdict& nv :
       cat::full_law_suite(powerset, cat::uniqueness_subcarrier(powerset)))
    ok &= check(nv.verdict.passed, "powerset law fails: " + nv.name, detail);

  const cat::AdjunctionData option = cat::build_option_neg_instance(2);
  bool bijective_failed = false, iso_failed = false, biconditional = false;
  for (const NamedVerdict& nv :
       cat::full_law_suite(option, cat::uniqueness_subcarrier(option))) {
    if (nv.name == "F bijective on objects") bijective_failed = !nv.verdict.passed;
    if (nv.name == "L is an isomorphism") iso_failed = !nv.verdict.passed;
    if (nv.name == "Kleislian biconditional") biconditional = nv.verdict.passed;
  }
  ok &= check(bijective_failed, "option-neg: bijectivity unexpectedly passed", detail);
  ok &= check(iso_failed, "option-neg: L-iso unexpectedly passed", detail);
  ok &= check(biconditional, "option-neg: biconditional violated", detail);
  return ok;
}

// --------------------------------------------------------------------------
// 4. Factorization out of C^2 at desk scale.

bool criterion_c2(std::string& detail) {
  bool ok = true;
  Rng rng(42);
  const Algebra c2 = Algebra::scalars(2);
  const Algebra cod({2, 3});
  const int degree = 8;
  double grid_residual = 0.0;
  double mult_residual = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Element a = random_contraction_01(cod, rng);
    ok &= check(is_positive_element(a).passed &&
                    leq(a, Element::unit(cod)).passed,
                "generator not within [0, 1]", detail);
    const LinearMap sigma(c2, cod, {a, sub(Element::unit(cod), a)});
    const C2Factorization fact = c2_factorization(sigma, degree);

    const std::vector<double> grid{-1.0, -0.5, 0.0, 0.5, 1.0};
    for (double l : grid)
      for (double m : grid) {
        Vector coords(2);
        coords << Complex(l, 0.0), Complex(m, 0.0);
        const double r = distance(sigma(Element::from_coords(c2, coords)),
                                  fact.apply(rho_c2(l, m)));
        grid_residual = std::max(grid_residual, r);
      }
    std::vector<Element> powers;
    for (int d = 0; d <= 2 * degree; ++d)
      powers.push_back(fact.apply(Polynomial::monomial(d)));
    for (int i = 0; i <= degree; ++i)
      for (int j = 0; j <= degree; ++j)
        mult_residual = std::max(
            mult_residual,
            distance(powers[static_cast<size_t>(i + j)],
                     mul(powers[static_cast<size_t>(i)],
                         powers[static_cast<size_t>(j)])));
  }
  ok &= check(grid_residual < 1e-9,
              "grid residual " + std::to_string(grid_residual), detail);
  ok &= check(mult_residual < 1e-8,
              "multiplicativity residual " + std::to_string(mult_residual), detail);
  return ok;
}

// --------------------------------------------------------------------------
// 5. Covariance criterion.

bool criterion_covariance(std::string& detail) {
  bool ok = true;
  Rng rng(42);
  const LinearMap miu = unitary_conjugation(Algebra::full_matrix(3),
                                            {random_unitary(3, rng)});
  // 50 states x 20 pairs = 1000 seeded triples.
  const Verdict preserved = covariance_preservation_test(miu, 50, 20, 42);
  ok &= check(preserved.passed && preserved.margin < 1e-10,
              "unitary conjugation deviates by " + std::to_string(preserved.margin),
              detail);

  const Verdict violated = covariance_preservation_test(
      depolarizing_channel(2, 0.5), 50, 20, 42, Tolerance{1e-3, 0.0});
  ok &= check(!violated.passed && violated.margin > 1e-3,
              "no depolarizing violation above 1e-3 in 1000 samples", detail);
  return ok;
}

// --------------------------------------------------------------------------
// 6. Norm facts.

bool criterion_norms(std::string& detail) {
  bool ok = true;
  Rng rng(42);
  const std::vector<std::pair<Algebra, Algebra>> shapes{
      {Algebra::full_matrix(2), Algebra::full_matrix(2)},
      {Algebra::scalars(2), Algebra({2, 1})},
      {Algebra({2, 1}), Algebra::full_matrix(3)},
      {Algebra::full_matrix(2), Algebra::scalars(3)},
  };
  // 100 PU maps x 100 elements = 10^4 pairs.
  for (int m = 0; m < 100; ++m) {
    const auto& [dom, cod] = shapes[static_cast<size_t>(m) % shapes.size()];
    const LinearMap f = random_pu_map(dom, cod, rng);
    for (int s = 0; s < 100; ++s) {
      const Element c = random_element(dom, rng);
      ok &= check(operator_norm(f(c)) <= 4.0 * operator_norm(c) + 1e-12,
                  "norm bound ||f(c)|| <= 4||c|| violated", detail);
      if (!ok) return ok;
    }
  }
  // Decomposition into positive parts reassembles tightly.
  for (int t = 0; t < 300; ++t) {
    const Element c = random_element(Algebra({2, 3}), rng);
    const JordanParts parts = jordan_decompose(c);
    ok &= check(distance(parts.reassemble(), c) < 1e-10,
                "reassembly error above 1e-10", detail);
    for (const Element* p :
         {&parts.pos_re, &parts.neg_re, &parts.pos_im, &parts.neg_im})
      ok &= check(is_positive_element(*p).passed, "non-positive part", detail);
  }
  // Representation independence of the amplified norm.
  const Algebra m2c({2, 1});
  for (int t = 0; t < 100; ++t) {
    std::vector<std::vector<Element>> entries(2, std::vector<Element>());
    for (int r = 0; r < 2; ++r)
      for (int s = 0; s < 2; ++s)
        entries[static_cast<size_t>(r)].push_back(random_element(m2c, rng));
    const double plain = matrix_norm_over_algebra(entries);
    const double permuted = matrix_norm_over_algebra(entries, std::vector<int>{1, 0});
    ok &= check(std::abs(plain - permuted) < 1e-9,
                "representation dependence " + std::to_string(plain - permuted),
                detail);
  }
  return ok;
}

// --------------------------------------------------------------------------
// 7. Gelfand transform on C^5.

bool criterion_gelfand(std::string& detail) {
  bool ok = true;
  const Algebra c5 = Algebra::scalars(5);
  const LinearMap gamma = gelfand_transform(c5);
  ok &= check(map_distance(gamma, identity_map(c5)) == 0.0,
              "gamma on C^5 is not exactly the identity table", detail);
  ok &= check(classify(gamma).miu(), "gamma not MIU", detail);
  ok &= check(std::abs(std::abs(gamma.coord_matrix().determinant()) - 1.0) < 1e-12,
              "gamma not a bijection", detail);
  Rng rng(42);
  for (int t = 0; t < 1000; ++t) {
    const Element b = random_element(c5, rng);
    // Sup norm of the function table against the element norm.
    double sup = 0.0;
    const Element image = gamma(b);
    for (int k = 0; k < 5; ++k) sup = std::max(sup, std::abs(image.block(k)(0, 0)));
    ok &= check(std::abs(sup - operator_norm(b)) < 1e-10, "norm mismatch", detail);
    if (!ok) return ok;
  }
  return ok;
}

// --------------------------------------------------------------------------
// 8. Classification coherence over the zoo.

bool criterion_coherence(std::string& detail) {
  bool ok = true;
  for (const ZooEntry& entry : full_zoo()) {
    const MapClassification c = classify(entry.map);
    if (c.label() == "MIU")
      ok &= check(c.completely_positive.passed && c.positive.passed,
                  "MIU label without CP and P: " + entry.name, detail);
    if (c.completely_positive.passed) {
      const Verdict sampled = check_positive(entry.map, 10000, 42);
      ok &= check(sampled.passed,
                  "CP map fails sampled positivity: " + entry.name, detail);
    }
  }
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"1. three-projection bundle (exact values, PU, non-multiplicative)", 1.0,
       criterion_c3},
      {"2. Choi spectra and zoo complete positivity", 5.0, criterion_choi},
      {"3. Kleisli laws (powerset size 2 exact; option-neg biconditional)", 10.0,
       criterion_kleisli},
      {"4. factorization out of C^2 (100 maps, grid 1e-9, degree-8 1e-8)", 30.0,
       criterion_c2},
      {"5. covariance criterion (MIU 1e-10; depolarizing violation 1e-3)", 10.0,
       criterion_covariance},
      {"6. norm facts (factor-4 bound, positive parts, representations)", 20.0,
       criterion_norms},
      {"7. Gelfand transform on C^5 (exact MIU bijection, isometric)", 10.0,
       criterion_gelfand},
      {"8. classification coherence over the zoo (10^4 samples)", 60.0,
       criterion_coherence},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool passed = false;
    try {
      passed = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const bool in_budget = seconds < criterion.budget_seconds;
    if (passed && in_budget) {
      std::printf("[PASS] %s  (%.2fs < %.0fs)\n", criterion.name.c_str(), seconds,
                  criterion.budget_seconds);
    } else {
      ++failures;
      std::printf("[FAIL] %s  (%.2fs / %.0fs)%s%s\n", criterion.name.c_str(), seconds,
                  criterion.budget_seconds, detail.empty() ? "" : " -- ",
                  detail.c_str());
    }
  }
  std::printf("%d/%zu acceptance criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
