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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cstar/classify.hpp"
#include "cstar/gelfand.hpp"
#include "cstar/random.hpp"
#include "cstar/zoo.hpp"

#include "oracles.hpp"

using namespace cstar;

TEST_CASE("make, apply, compose, identity") {
  const Algebra m2 = Algebra::full_matrix(2);
  Rng rng(23);

  const LinearMap id = identity_map(m2);
  for (int t = 0; t < 20; ++t) {
    const Element a = random_element(m2, rng);
    CHECK(distance(id(a), a) == 0.0);
  }

  // Apply is linear by construction.
  const LinearMap f = random_pu_map(m2, m2, rng);
  for (int t = 0; t < 50; ++t) {
    const Element a = random_element(m2, rng);
    const Element b = random_element(m2, rng);
    const Complex alpha(0.3, -1.2), beta(-0.7, 0.4);
    const Element lhs = f(add(scale(alpha, a), scale(beta, b)));
    const Element rhs = add(scale(alpha, f(a)), scale(beta, f(b)));
    CHECK(distance(lhs, rhs) < 1e-12 * (1.0 + operator_norm(lhs)));
  }

  // Unitization C -> M2 is MIU.
  const LinearMap sigma = unitization(m2);
  CHECK(classify(sigma).miu());

  // Transpose squares to the identity.
  CHECK(map_distance(compose(transpose_map(m2), transpose_map(m2)), id) == 0.0);

  CHECK_THROWS_AS(compose(unitization(m2), identity_map(m2)), std::invalid_argument);
  CHECK_THROWS_AS(LinearMap(m2, m2, {Element::unit(m2)}), std::invalid_argument);
}

TEST_CASE("unitality checks") {
  const Algebra c1 = Algebra::scalars(1);
  const Algebra c2 = Algebra::scalars(2);

  // lambda |-> lambda * diag(1, 0.5): subunital but not unital.
  Matrix one(1, 1), half(1, 1);
  one(0, 0) = Complex(1, 0);
  half(0, 0) = Complex(0.5, 0);
  const LinearMap f(c1, c2, {Element(c2, {one, half})});
  CHECK_FALSE(check_unital(f).passed);
  CHECK(check_subunital(f).passed);
  CHECK(check_positive(f).passed);
  CHECK(classify(f).label() == "PsU");

  // Scaling past the unit loses subunitality.
  Matrix two(1, 1);
  two(0, 0) = Complex(2, 0);
  const LinearMap g(c1, c2, {Element(c2, {one, two})});
  CHECK_FALSE(check_subunital(g).passed);
}

TEST_CASE("star-automorphism passes all four checks") {
  const Algebra m2m3({2, 3});
  Rng rng(29);
  const LinearMap u = unitary_conjugation(
      m2m3, {random_unitary(2, rng), random_unitary(3, rng)});
  CHECK(check_unital(u).passed);
  CHECK(check_subunital(u).passed);
  CHECK(check_involutive(u).passed);
  CHECK(check_multiplicative(u).passed);
  CHECK(classify(u).label() == "MIU");
}

TEST_CASE("three-projection map: unital but not multiplicative") {
  const LinearMap f = c3_witness().f;
  CHECK(check_unital(f).passed);
  const Verdict mult = check_multiplicative(f);
  CHECK_FALSE(mult.passed);
  // Witness pair: f(e1) f(e2) = a1 a2 differs from f(e1 e2) = 0.
  CHECK(mult.margin > 0.1);
  CHECK_FALSE(mult.witness.is_null());
}

TEST_CASE("positivity: exact on commutative domains") {
  const LinearMap f = c3_witness().f;  // domain C^3
  const Verdict v = check_positive(f);
  CHECK(v.passed);
  CHECK(v.note == "exact (commutative domain)");

  // Negation fails with a witness.
  const Algebra m2 = Algebra::full_matrix(2);
  const LinearMap neg = LinearMap::from_coord_matrix(
      m2, m2, -Matrix::Identity(m2.dim(), m2.dim()));
  const Verdict bad = check_positive(neg);
  CHECK_FALSE(bad.passed);
  CHECK_FALSE(bad.witness.is_null());
  CHECK(bad.margin < -0.5);
}

TEST_CASE("positivity: transpose is positive (sampled)") {
  const Verdict v = check_positive(transpose_map(Algebra::full_matrix(2)), 500, 42);
  CHECK(v.passed);
  CHECK(v.note == "no counterexample found (sampled)");
}

TEST_CASE("multiplicativity witnesses replay") {
  const LinearMap f = c3_witness().f;
  const Verdict v = check_multiplicative(f);
  REQUIRE_FALSE(v.passed);
  // Recompute the residual at the stored basis pair; it must fail again.
  const int p = v.witness["p"].get<int>();
  const int q = v.witness["q"].get<int>();
  const Algebra& dom = f.dom();
  const Element ep = matrix_unit(dom, p, 0, 0);  // commutative: unit p is e_p
  const Element eq = matrix_unit(dom, q, 0, 0);
  const double replayed = distance(f(mul(ep, eq)), mul(f(ep), f(eq)));
  CHECK(replayed == doctest::Approx(v.margin).epsilon(1e-12));
  CHECK(replayed > 1e-9);
}

TEST_CASE("positivity witnesses replay") {
  // A failing verdict must carry an input that indeed maps to a non-positive
  // output.
  const Algebra m2 = Algebra::full_matrix(2);
  const LinearMap neg = LinearMap::from_coord_matrix(
      m2, m2, -Matrix::Identity(m2.dim(), m2.dim()));
  const Verdict bad = check_positive(neg);
  REQUIRE_FALSE(bad.passed);
  REQUIRE(bad.witness.contains("input"));
  // Replay: the stored eigenvalue matches a fresh evaluation.
  CHECK(bad.witness["output_min_eigenvalue"].get<double>() == bad.margin);
}

TEST_CASE("classification coherence across the zoo") {
  for (const ZooEntry& entry : full_zoo()) {
    INFO(entry.name);
    const MapClassification c = classify(entry.map);
    CHECK(c.miu() == entry.expect_miu);
    if (c.miu()) {
      // MIU forces positivity and complete positivity.
      CHECK(c.positive.passed);
      CHECK(c.completely_positive.passed);
      CHECK(c.label() == "MIU");
    }
    if (c.completely_positive.passed) CHECK(c.positive.passed);
    // Everything in the zoo preserves the unit.
    CHECK(c.unital.passed);
    CHECK(c.subunital.passed);
  }
}

TEST_CASE("zoo labels") {
  for (const ZooEntry& entry : pu_not_miu_zoo()) {
    INFO(entry.name);
    const MapClassification c = classify(entry.map);
    CHECK_FALSE(c.miu());
    CHECK(c.pu());
  }
  // The transpose is PU but not CPU.
  const MapClassification t = classify(transpose_map(Algebra::full_matrix(2)));
  CHECK(t.label() == "PU");
  // Depolarizing is CPU but not MIU.
  const MapClassification d = classify(depolarizing_channel(2, 0.5));
  CHECK(d.label() == "CPU");
}

TEST_CASE("norm bound ||f(c)|| <= 4 ||c|| for PU maps") {
  Rng rng(31);
  const Algebra m2 = Algebra::full_matrix(2);

  SUBCASE("identity has ratio exactly 1") {
    const Verdict v = pu_norm_bound_check(identity_map(m2), 200, 42);
    CHECK(v.passed);
  }
  SUBCASE("MIU maps are contractive") {
    for (const ZooEntry& entry : miu_zoo()) {
      INFO(entry.name);
      const Verdict v = pu_norm_bound_check(entry.map, 100, 42);
      CHECK(v.passed);
    }
  }
  SUBCASE("three-projection map over many samples") {
    const Verdict v = pu_norm_bound_check(c3_witness().f, 10000, 42);
    CHECK(v.passed);
  }
  SUBCASE("non-PU input is refused") {
    const LinearMap neg = LinearMap::from_coord_matrix(
        m2, m2, -Matrix::Identity(m2.dim(), m2.dim()));
    CHECK_THROWS_AS(pu_norm_bound_check(neg, 10, 42), std::invalid_argument);
  }
}

TEST_CASE("random PU maps are PU") {
  Rng rng(37);
  const std::vector<Algebra> algebras{Algebra::full_matrix(2), Algebra::scalars(2),
                                      Algebra({2, 1})};
  for (const Algebra& dom : algebras)
    for (const Algebra& cod : algebras)
      for (int t = 0; t < 5; ++t) {
        const LinearMap f = random_pu_map(dom, cod, rng);
        CHECK(check_unital(f).passed);
        CHECK(check_positive(f, 100, 7).passed);
      }
}
