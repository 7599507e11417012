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

#include "cstar/zoo.hpp"

#include "cstar/gelfand.hpp"
#include "cstar/random.hpp"
#include "cstar/states.hpp"

namespace cstar {

namespace {

LinearMap conjugation_on(const Algebra& a, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Matrix> unitaries;
  unitaries.reserve(static_cast<size_t>(a.num_blocks()));
  for (int n : a.block_dims()) unitaries.push_back(random_unitary(n, rng));
  return unitary_conjugation(a, unitaries);
}

LinearMap blend(const LinearMap& f, const LinearMap& g, double t) {
  return LinearMap::from_coord_matrix(
      f.dom(), f.cod(), t * f.coord_matrix() + (1.0 - t) * g.coord_matrix());
}

}  // namespace

std::vector<ZooEntry> miu_zoo() {
  const Algebra c2 = Algebra::scalars(2);
  const Algebra c3 = Algebra::scalars(3);
  const Algebra c4 = Algebra::scalars(4);
  const Algebra m2 = Algebra::full_matrix(2);
  const Algebra m3 = Algebra::full_matrix(3);
  const Algebra m4 = Algebra::full_matrix(4);
  const Algebra m2c({2, 1});
  const Algebra m2m2({2, 2});
  const Algebra m2m3({2, 3});

  Matrix pauli_x(2, 2);
  pauli_x << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);

  std::vector<ZooEntry> zoo;
  zoo.push_back({"id_C2", LinearMap::identity(c2), true});
  zoo.push_back({"id_M2", LinearMap::identity(m2), true});
  zoo.push_back({"id_M2+C", LinearMap::identity(m2c), true});
  zoo.push_back({"swap_C2", block_embedding(c2, c2, {{0, 1}, {1, 0}}), true});
  zoo.push_back(
      {"cycle_C3", block_embedding(c3, c3, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}), true});
  zoo.push_back({"reverse_C3",
                 block_embedding(c3, c3, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}), true});
  zoo.push_back({"block_swap_M2+M2",
                 block_embedding(m2m2, m2m2, {{0, 1}, {1, 0}}), true});
  zoo.push_back({"conj_M2", conjugation_on(m2, 11), true});
  zoo.push_back({"conj_M3", conjugation_on(m3, 12), true});
  zoo.push_back({"conj_M2+M3", conjugation_on(m2m3, 13), true});
  zoo.push_back({"conj_M3_alt", conjugation_on(m3, 14), true});
  zoo.push_back({"pauli_x_conj_M2", unitary_conjugation(m2, {pauli_x}), true});
  zoo.push_back({"diag_C2_to_M2", block_embedding(c2, m2, {{1, 1}}), true});
  zoo.push_back({"unitization_C_to_M3", unitization(m3), true});
  zoo.push_back({"double_M2_to_M4", block_embedding(m2, m4, {{2}}), true});
  zoo.push_back({"pair_M2_to_M2+M2", block_embedding(m2, m2m2, {{1}, {1}}), true});
  zoo.push_back({"duplicate_C2_to_C4",
                 block_embedding(c2, c4, {{1, 0}, {0, 1}, {1, 0}, {0, 1}}), true});
  zoo.push_back({"diag_C4_to_M2+M2",
                 block_embedding(c4, m2m2, {{1, 1, 0, 0}, {0, 0, 1, 1}}), true});
  zoo.push_back({"spread_M2+C_to_M2+C+C",
                 block_embedding(m2c, Algebra({2, 1, 1}), {{1, 0}, {0, 1}, {0, 1}}),
                 true});
  zoo.push_back({"twisted_double_M2",
                 compose(conjugation_on(m4, 15), block_embedding(m2, m4, {{2}})), true});
  return zoo;
}

std::vector<ZooEntry> pu_not_miu_zoo() {
  const Algebra c2 = Algebra::scalars(2);
  const Algebra m2 = Algebra::full_matrix(2);
  const Algebra m3 = Algebra::full_matrix(3);
  const Algebra m2m2({2, 2});

  Rng rng(21);
  const Matrix rho = random_density(2, rng);

  std::vector<ZooEntry> zoo;
  zoo.push_back({"transpose_M2", transpose_map(m2), false});
  zoo.push_back({"transpose_M3", transpose_map(m3), false});
  zoo.push_back({"depolarize_half_M2", depolarizing_channel(2, 0.5), false});
  zoo.push_back({"depolarize_quarter_M3", depolarizing_channel(3, 0.25), false});
  zoo.push_back({"pinch_M2", pinching_map(m2), false});
  zoo.push_back({"three_projection_map", c3_witness().f, false});
  zoo.push_back({"trace_state_M2", trace_state(m2, rho), false});
  zoo.push_back({"interval_state_C2", state_from_x(0.3).functional, false});
  zoo.push_back({"blend_id_conj_M2",
                 blend(LinearMap::identity(m2), conjugation_on(m2, 22), 0.5), false});
  // (a, b) |-> (a + b) / 2: unital and completely positive, kills products.
  Matrix average = Matrix::Zero(m2.dim(), m2m2.dim());
  for (int p = 0; p < m2.dim(); ++p) {
    average(p, p) = Complex(0.5, 0.0);
    average(p, p + m2.dim()) = Complex(0.5, 0.0);
  }
  zoo.push_back(
      {"average_M2+M2_to_M2", LinearMap::from_coord_matrix(m2m2, m2, average), false});
  return zoo;
}

std::vector<ZooEntry> full_zoo() {
  std::vector<ZooEntry> zoo = miu_zoo();
  std::vector<ZooEntry> extra = pu_not_miu_zoo();
  zoo.insert(zoo.end(), std::make_move_iterator(extra.begin()),
             std::make_move_iterator(extra.end()));
  return zoo;
}

}  // namespace cstar
