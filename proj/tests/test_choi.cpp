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

#include <Eigen/Eigenvalues>

#include "cstar/choi.hpp"
#include "cstar/classify.hpp"
#include "cstar/random.hpp"
#include "cstar/zoo.hpp"

using namespace cstar;

namespace {

std::vector<double> choi_eigenvalues(const LinearMap& f) {
  return choi(f).all_eigenvalues();
}

}  // namespace

TEST_CASE("Choi of the identity on M2: eigenvalues {0, 0, 0, 2}") {
  // Oracle: the matrix sum_ij E_ij (x) E_ij is twice the projector onto the
  // maximally entangled vector; built here explicitly and diagonalized
  // independently of choi().
  Matrix direct = Matrix::Zero(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Matrix e = Matrix::Zero(2, 2);
      e(i, j) = Complex(1, 0);
      Matrix kron = Matrix::Zero(4, 4);
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s)
          kron.block(r * 2, s * 2, 2, 2) = e(r, s) * e;
      direct += kron;
    }
  Eigen::SelfAdjointEigenSolver<Matrix> oracle(direct);

  const std::vector<double> got = choi_eigenvalues(identity_map(Algebra::full_matrix(2)));
  REQUIRE(got.size() == 4);
  for (int i = 0; i < 4; ++i)
    CHECK(got[static_cast<size_t>(i)] ==
          doctest::Approx(oracle.eigenvalues()(i)).epsilon(1e-12));
  CHECK(got[3] == doctest::Approx(2.0));
  CHECK(got[0] == doctest::Approx(0.0));
  CHECK(check_completely_positive(identity_map(Algebra::full_matrix(2))).passed);
}

TEST_CASE("Choi of the transpose on M2 is the swap: eigenvalues {-1, 1, 1, 1}") {
  // Oracle: sum_ij E_ij (x) E_ji is the swap |rs> -> |sr>, built directly.
  Matrix swap = Matrix::Zero(4, 4);
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < 2; ++s) swap(r * 2 + s, s * 2 + r) = Complex(1, 0);
  Eigen::SelfAdjointEigenSolver<Matrix> oracle(swap);
  CHECK(oracle.eigenvalues()(0) == doctest::Approx(-1.0));
  CHECK(oracle.eigenvalues()(1) == doctest::Approx(1.0));

  const std::vector<double> got = choi_eigenvalues(transpose_map(Algebra::full_matrix(2)));
  REQUIRE(got.size() == 4);
  const ChoiData data = choi(transpose_map(Algebra::full_matrix(2)));
  CHECK((data.blocks[0] - swap).cwiseAbs().maxCoeff() == 0.0);
  CHECK(got[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(got[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(got[3] == doctest::Approx(1.0).epsilon(1e-12));

  const Verdict cp = check_completely_positive(transpose_map(Algebra::full_matrix(2)));
  CHECK_FALSE(cp.passed);
  CHECK(cp.margin == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("every MIU map in the zoo is completely positive") {
  for (const ZooEntry& entry : miu_zoo()) {
    INFO(entry.name);
    CHECK(check_completely_positive(entry.map).passed);
  }
}

TEST_CASE("CP composes") {
  Rng rng(41);
  std::vector<LinearMap> cp_maps;
  for (const ZooEntry& entry : full_zoo())
    if (entry.map.dom() == entry.map.cod() &&
        entry.map.dom() == Algebra::full_matrix(2) &&
        check_completely_positive(entry.map).passed)
      cp_maps.push_back(entry.map);
  REQUIRE(cp_maps.size() >= 3);
  for (const LinearMap& f : cp_maps)
    for (const LinearMap& g : cp_maps)
      CHECK(check_completely_positive(compose(g, f)).passed);
}

TEST_CASE("CP maps pass sampled positivity") {
  for (const ZooEntry& entry : full_zoo()) {
    if (!check_completely_positive(entry.map).passed) continue;
    INFO(entry.name);
    CHECK(check_positive(entry.map, 1000, 42).passed);
  }
}

TEST_CASE("amplification") {
  const Algebra m2 = Algebra::full_matrix(2);

  SUBCASE("level 1 is the map itself") {
    const LinearMap f = depolarizing_channel(2, 0.25);
    CHECK(map_distance(amplify(f, 1), f) == 0.0);
  }

  SUBCASE("amplified identity is the identity") {
    const LinearMap amp = amplify(identity_map(m2), 3);
    CHECK(amp.dom().block_dims() == std::vector<int>{6});
    CHECK(map_distance(amp, identity_map(Algebra::full_matrix(6))) == 0.0);
  }

  SUBCASE("partial transpose of the maximally entangled projector") {
    const LinearMap amp = amplify(transpose_map(m2), 2);
    // The normalized maximally entangled projector in M4 = M2 (x) M2.
    Matrix proj = Matrix::Zero(4, 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) proj(i * 2 + i, j * 2 + j) = Complex(0.5, 0.0);
    const Element input = Element::from_matrix(Algebra::full_matrix(4), proj);
    CHECK(is_positive_element(input).passed);
    const Element output = amp(input);
    const Verdict v = is_positive_element(output);
    CHECK_FALSE(v.passed);
    CHECK(v.margin == doctest::Approx(-0.5).epsilon(1e-12));
  }

  SUBCASE("amplification of a MIU map stays MIU") {
    Rng rng(43);
    const LinearMap u = unitary_conjugation(m2, {random_unitary(2, rng)});
    const LinearMap amp = amplify(u, 2);
    CHECK(classify(amp).miu());
  }

  SUBCASE("amplification respects direct sums in the domain") {
    const Algebra m2c({2, 1});
    const LinearMap f = identity_map(m2c);
    const LinearMap amp = amplify(f, 2);
    CHECK(amp.dom().block_dims() == std::vector<int>{4, 2});
    CHECK(check_multiplicative(amp).passed);
    CHECK(check_unital(amp).passed);
  }
}

TEST_CASE("matrix norm over an algebra") {
  const Algebra m2c({2, 1});
  const Algebra c1 = Algebra::scalars(1);
  Rng rng(47);

  SUBCASE("1x1 matrix is the operator norm") {
    for (int t = 0; t < 20; ++t) {
      const Element a = random_element(m2c, rng);
      CHECK(matrix_norm_over_algebra({{a}}) == doctest::Approx(operator_norm(a)));
    }
  }

  SUBCASE("2x2 over the scalars is the usual matrix norm") {
    for (int t = 0; t < 20; ++t) {
      const Matrix m = random_ginibre(2, 2, rng);
      std::vector<std::vector<Element>> entries(2, std::vector<Element>());
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) {
          Matrix cell(1, 1);
          cell(0, 0) = m(r, s);
          entries[static_cast<size_t>(r)].push_back(Element(c1, {cell}));
        }
      CHECK(matrix_norm_over_algebra(entries) ==
            doctest::Approx(detail::matrix_operator_norm(m)));
    }
  }

  SUBCASE("independence of the block order in the representation") {
    for (int t = 0; t < 100; ++t) {
      std::vector<std::vector<Element>> entries(2, std::vector<Element>());
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s)
          entries[static_cast<size_t>(r)].push_back(random_element(m2c, rng));
      const double plain = matrix_norm_over_algebra(entries);
      const double permuted =
          matrix_norm_over_algebra(entries, std::vector<int>{1, 0});
      CHECK(std::abs(plain - permuted) < 1e-10 * (1.0 + plain));
    }
  }

  SUBCASE("C*-identity in the amplified algebra") {
    for (int t = 0; t < 20; ++t) {
      std::vector<std::vector<Element>> a(2, std::vector<Element>());
      std::vector<std::vector<Element>> a_star_a(2, std::vector<Element>());
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) a[static_cast<size_t>(r)].push_back(random_element(m2c, rng));
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) {
          Element acc = Element::zero(m2c);
          for (int k = 0; k < 2; ++k)
            acc = add(acc, mul(star(a[static_cast<size_t>(k)][static_cast<size_t>(r)]),
                               a[static_cast<size_t>(k)][static_cast<size_t>(s)]));
          a_star_a[static_cast<size_t>(r)].push_back(acc);
        }
      const double n = matrix_norm_over_algebra(a);
      CHECK(matrix_norm_over_algebra(a_star_a) ==
            doctest::Approx(n * n).epsilon(1e-9));
    }
  }
}
