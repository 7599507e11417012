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
#include <string>

#include "cstar/linear_map.hpp"
#include "cstar/tolerance.hpp"
#include "cstar/verdict.hpp"

namespace cstar {

/// ||f(1) - 1|| <= tol. Margin is the deviation.
Verdict check_unital(const LinearMap& f, const Tolerance& tol = {});

/// f(1) <= 1. Margin is the minimal eigenvalue of 1 - f(1).
Verdict check_subunital(const LinearMap& f, const Tolerance& tol = {});

/// f(a*) = f(a)* on every matrix-unit basis element (sufficient by
/// antilinearity of the involution). Margin is the worst residual.
Verdict check_involutive(const LinearMap& f, const Tolerance& tol = {});

/// f(e_p e_q) = f(e_p) f(e_q) on every basis pair (sufficient by
/// bilinearity). A failing verdict carries the offending pair.
Verdict check_multiplicative(const LinearMap& f, const Tolerance& tol = {});

/// Positivity of the map. Exact for commutative domains, where the extreme
/// rays of the positive cone are the coordinate projections: pass iff
/// f(e_k) >= 0 for every coordinate. Otherwise sampled: f is evaluated on a
/// deterministic sweep of rank-one block projections and on n_samples random
/// positive elements b*b; a pass is labelled "no counterexample found
/// (sampled)". A failing verdict carries the positive input that was mapped
/// to a non-positive output.
Verdict check_positive(const LinearMap& f, int n_samples = 200,
                       std::uint64_t seed = 42, const Tolerance& tol = {});

/// Classification record for a map: the six checkable flags plus derived
/// labels. MIU implies CPU implies PU implies PsU; label() reports the
/// strongest one that holds.
struct MapClassification {
  Verdict unital;
  Verdict subunital;
  Verdict involutive;
  Verdict multiplicative;
  Verdict positive;
  Verdict completely_positive;

  bool miu() const { return multiplicative.passed && involutive.passed && unital.passed; }
  bool cpu() const { return completely_positive.passed && unital.passed; }
  bool pu() const { return positive.passed && unital.passed; }
  bool psu() const { return positive.passed && subunital.passed; }

  std::string label() const;  // "MIU", "CPU", "PU", "PsU" or "none"
};

struct ClassifyOptions {
  Tolerance tol{};
  int positivity_samples = 200;
  std::uint64_t seed = 42;
};

/// Run all six checks. Pure function; recomputation yields equal results
/// for equal inputs and options.
MapClassification classify(const LinearMap& f, const ClassifyOptions& opts = {});

/// For a PU map f, checks ||f(c)|| <= 4 ||c|| on random samples, walking the
/// decomposition c = c1 - c2 + i c3 - i c4 into positive parts (each part
/// must satisfy ||f(c_i)|| <= ||c_i||). The note reports the empirical
/// maximum of ||f(c)|| / ||c||, which stays below 1 in practice; only the
/// factor-4 bound is asserted. Throws if f is not PU.
Verdict pu_norm_bound_check(const LinearMap& f, int n_samples = 1000,
                            std::uint64_t seed = 42, const Tolerance& tol = {});

}  // namespace cstar
