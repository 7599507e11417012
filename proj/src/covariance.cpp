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

#include "cstar/covariance.hpp"

#include <stdexcept>

#include "cstar/classify.hpp"
#include "cstar/json_io.hpp"
#include "cstar/random.hpp"
#include "cstar/states.hpp"

namespace cstar {

Complex covariance(const LinearMap& phi, const Element& a, const Element& b,
                   const Tolerance& tol) {
  if (!is_state(phi, tol).passed)
    throw std::invalid_argument("covariance: phi is not a state");
  const Complex phi_ab = phi(mul(star(a), b)).scalar();
  const Complex phi_a = phi(a).scalar();
  const Complex phi_b = phi(b).scalar();
  return phi_ab - std::conj(phi_a) * phi_b;
}

Verdict covariance_preservation_test(const LinearMap& T, int n_states, int n_pairs,
                                     std::uint64_t seed, const Tolerance& tol) {
  if (!check_unital(T, tol).passed || !check_positive(T, 50, seed, tol).passed)
    throw std::invalid_argument("covariance_preservation_test: map is not PU");
  Rng rng(seed);
  double max_deviation = 0.0;
  for (int s = 0; s < n_states; ++s) {
    const LinearMap phi = random_state(T.cod(), rng);
    const LinearMap phi_T = compose(phi, T);
    for (int p = 0; p < n_pairs; ++p) {
      const Element a = random_element(T.dom(), rng);
      const Element b = random_element(T.dom(), rng);
      const Complex lhs = covariance(phi, T(a), T(b), tol);
      const Complex rhs = covariance(phi_T, a, b, tol);
      const double deviation = std::abs(lhs - rhs);
      max_deviation = std::max(max_deviation, deviation);
      if (!tol.close(deviation, 1.0)) {
        return Verdict::fail(deviation,
                             {{"state", map_to_json(phi)},
                              {"a", element_to_json(a)},
                              {"b", element_to_json(b)},
                              {"deviation", deviation}},
                             "covariance not preserved");
      }
    }
  }
  return Verdict::pass(max_deviation,
                       "no violation over " + std::to_string(n_states) + " states x " +
                           std::to_string(n_pairs) + " pairs (sampled)");
}

}  // namespace cstar
