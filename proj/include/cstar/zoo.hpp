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

#include <string>
#include <vector>

#include "cstar/linear_map.hpp"

namespace cstar {

struct ZooEntry {
  std::string name;
  LinearMap map;
  bool expect_miu;  // construction-time knowledge, cross-checked in tests
};

/// Twenty *-homomorphisms between small algebras: identities, unitary
/// conjugations, permutations, diagonal embeddings and unitizations.
/// Deterministic (fixed seeds).
std::vector<ZooEntry> miu_zoo();

/// Unital positive maps that are not multiplicative: transpose, pinching,
/// depolarizing mixes, states, convex blends of homomorphisms, and the
/// three-projection witness map.
std::vector<ZooEntry> pu_not_miu_zoo();

/// Both lists concatenated.
std::vector<ZooEntry> full_zoo();

}  // namespace cstar
