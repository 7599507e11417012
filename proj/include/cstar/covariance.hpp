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

#include <cstdint>

#include "cstar/linear_map.hpp"
#include "cstar/tolerance.hpp"
#include "cstar/verdict.hpp"

namespace cstar {

/// Cov_phi(a, b) = phi(a* b) - conj(phi(a)) phi(b) for a state phi. Throws
/// if phi is not a state.
Complex covariance(const LinearMap& phi, const Element& a, const Element& b,
                   const Tolerance& tol = {});

/// Whether the unital positive map T preserves covariance: samples states
/// phi on the codomain and element pairs (a, b) in the domain, and compares
/// Cov_phi(Ta, Tb) with Cov_{phi o T}(a, b). Multiplicative maps preserve
/// covariance identically; a non-multiplicative map is expected to produce a
/// violating triple, which the failing verdict carries. Margin is the
/// largest deviation seen. Throws if T is not PU.
Verdict covariance_preservation_test(const LinearMap& T, int n_states = 50,
                                     int n_pairs = 20, std::uint64_t seed = 42,
                                     const Tolerance& tol = {});

}  // namespace cstar
