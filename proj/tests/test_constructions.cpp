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
#include "cstar/constructions.hpp"
#include "cstar/random.hpp"
#include "cstar/states.hpp"

using namespace cstar;

TEST_CASE("direct sum shape and norm law") {
  const Algebra m2 = Algebra::full_matrix(2);
  const Algebra c1 = Algebra::scalars(1);
  const DirectSum sum = direct_sum({m2, c1});
  CHECK(sum.sum.block_dims() == std::vector<int>{2, 1});

  // A single summand reproduces the algebra.
  CHECK(direct_sum({m2}).sum == m2);

  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const Element x = random_element(m2, rng);
    const Element y = random_element(c1, rng);
    const Element pair = add(sum.inject[0](x), sum.inject[1](y));
    // Sup norm over the summands.
    CHECK(operator_norm(pair) ==
          doctest::Approx(std::max(operator_norm(x), operator_norm(y))));
    // Injection preserves the norm exactly (same stored blocks).
    CHECK(operator_norm(sum.inject[0](x)) == operator_norm(x));
    // Projections recover the summands.
    CHECK(distance(sum.project[0](pair), x) == 0.0);
  }
}

TEST_CASE("projections are MIU; injections unital only for one summand") {
  const DirectSum sum = direct_sum({Algebra::full_matrix(2), Algebra::scalars(2)});
  for (const LinearMap& p : sum.project) {
    const MapClassification c = classify(p);
    CHECK(c.miu());
  }
  for (const LinearMap& in : sum.inject) {
    CHECK(check_multiplicative(in).passed);
    CHECK(check_involutive(in).passed);
    CHECK_FALSE(check_unital(in).passed);
    CHECK(check_subunital(in).passed);
  }
  const DirectSum single = direct_sum({Algebra::full_matrix(2)});
  CHECK(check_unital(single.inject[0]).passed);
}

TEST_CASE("tupling satisfies the projection equations exactly") {
  const Algebra dom = Algebra::full_matrix(2);
  const DirectSum sum = direct_sum({Algebra::full_matrix(2), Algebra::scalars(1)});
  Rng rng(5);
  const LinearMap f1 = random_pu_map(dom, Algebra::full_matrix(2), rng);
  const LinearMap f2 = random_state(dom, rng);
  const LinearMap tup = tuple_map(sum, {f1, f2});
  CHECK(map_distance(compose(sum.project[0], tup), f1) == 0.0);
  CHECK(map_distance(compose(sum.project[1], tup), f2) == 0.0);
}

TEST_CASE("equaliser of identity with itself is everything") {
  const Algebra m2 = Algebra::full_matrix(2);
  const Equaliser eq = equaliser(identity_map(m2), identity_map(m2));
  CHECK(eq.view.subspace_dim() == 4);
  CHECK(eq.view.verify_closure().passed);
  CHECK(eq.view.contains_unit());
}

TEST_CASE("equaliser refuses maps that are not MIU") {
  const Algebra m2 = Algebra::full_matrix(2);
  // The transpose reverses products: on matrix units, g(E01 E11) = E10 but
  // g(E01) g(E11) = E10 E11 = 0.
  CHECK_FALSE(check_multiplicative(transpose_map(m2)).passed);
  CHECK_THROWS_AS(equaliser(identity_map(m2), transpose_map(m2)),
                  std::invalid_argument);
  // Mismatched shapes are refused before classification.
  CHECK_THROWS_AS(equaliser(identity_map(m2), identity_map(Algebra::scalars(2))),
                  std::invalid_argument);
}

TEST_CASE("equaliser of id and swap on C^2 is the diagonal") {
  const Algebra c2 = Algebra::scalars(2);
  const LinearMap swap = block_embedding(c2, c2, {{0, 1}, {1, 0}});
  const Equaliser eq = equaliser(identity_map(c2), swap);
  REQUIRE(eq.view.subspace_dim() == 1);
  // The kernel of id - swap is spanned by (1, 1) up to phase.
  const Element basis = eq.view.basis()[0];
  CHECK(std::abs(std::abs(basis.block(0)(0, 0)) - std::abs(basis.block(1)(0, 0))) <
        1e-12);
  CHECK(eq.view.verify_closure().passed);
  CHECK(eq.view.contains_unit());

  // f o incl = g o incl at the level of stored coordinates.
  const Matrix difference =
      (identity_map(c2).coord_matrix() - swap.coord_matrix()) * eq.inclusion_coords();
  CHECK(difference.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("equaliser of a block swap and the factorization through it") {
  const Algebra m2m2({2, 2});
  const Algebra m2 = Algebra::full_matrix(2);
  const LinearMap f = identity_map(m2m2);
  const LinearMap g = block_embedding(m2m2, m2m2, {{0, 1}, {1, 0}});
  const Equaliser eq = equaliser(f, g);
  CHECK(eq.view.subspace_dim() == 4);  // pairs (a, a)
  CHECK(eq.view.verify_closure().passed);
  CHECK(eq.view.contains_unit());

  const Matrix residual =
      (f.coord_matrix() - g.coord_matrix()) * eq.inclusion_coords();
  CHECK(residual.cwiseAbs().maxCoeff() < 1e-10);

  // A PU map d whose range lies in the equaliser factors through it with
  // e o h = d up to roundoff from the least-squares solve.
  Rng rng(9);
  const LinearMap phi = random_state(m2, rng);
  const LinearMap psi = random_state(m2, rng);
  const Element p = random_contraction_01(m2, rng);
  const Element pp(m2m2, {p.block(0), p.block(0)});
  const Element complement = sub(Element::unit(m2m2), pp);
  const Matrix action =
      pp.coords() * phi.coord_matrix() + complement.coords() * psi.coord_matrix();
  const LinearMap d = LinearMap::from_coord_matrix(m2, m2m2, action);
  CHECK(check_unital(d).passed);
  CHECK(map_distance(compose(f, d), compose(g, d)) < 1e-12);

  const EqualiserFactorization fact = factor_through_equaliser(eq, d);
  CHECK(fact.verdict.passed);
  CHECK(fact.verdict.margin < 1e-12);
  CHECK(map_distance(fact.recomposed, d) < 1e-12);

  // A map that leaves the equaliser is flagged.
  Rng rng2(10);
  const LinearMap outside = random_pu_map(m2, m2m2, rng2);
  if (map_distance(compose(f, outside), compose(g, outside)) > 1e-6) {
    const EqualiserFactorization bad = factor_through_equaliser(eq, outside);
    CHECK_FALSE(bad.verdict.passed);
  }
}

TEST_CASE("equaliser basis closure under products") {
  const Algebra c4 = Algebra::scalars(4);
  // Equalise the identity with the permutation fixing the first two
  // coordinates and swapping the last two.
  const LinearMap perm = block_embedding(
      c4, c4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
  const Equaliser eq = equaliser(identity_map(c4), perm);
  CHECK(eq.view.subspace_dim() == 3);
  const Verdict closure = eq.view.verify_closure(Tolerance{1e-8, 1e-8});
  CHECK(closure.passed);
  CHECK(closure.margin < 1e-8);
}
