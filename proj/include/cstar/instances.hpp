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

#include "cstar/category.hpp"

namespace cstar::cat {

// Canonical finite-set encoding: elements are strings, a set is the sorted,
// deduplicated, comma-joined list in braces; pointed sets append the point
// after a semicolon. Parsing splits at top-level commas (brace depth zero).

std::string set_id(std::vector<std::string> elements);
std::vector<std::string> set_elements(const std::string& id);
std::string pointed_id(const std::vector<std::string>& elements,
                       const std::string& point);
std::pair<std::string, std::string> pointed_parts(const std::string& id);

/// All subsets of the given elements as canonical ids. Throws SizeBoundError
/// beyond the enumeration cap.
std::vector<std::string> power_set_ids(const std::vector<std::string>& elements);

/// The category of finite sets and functions with the given carrier.
/// Objects outside the carrier (such as iterated powersets) are realized on
/// demand from their canonical ids.
CategoryPtr make_set_category(std::vector<Obj> carrier);

/// Finite sets and multimaps (= relations); composition is relational.
CategoryPtr make_multimap_category(std::vector<Obj> carrier);

/// Finite pointed sets and point-preserving functions.
CategoryPtr make_pointed_category(std::vector<Obj> carrier);

/// The sets-and-multimaps adjunction whose monad is the powerset monad:
/// F embeds a function as its graph, U sends a multimap to the image map
/// between powersets, the unit is x |-> {x} and the counit is the
/// membership relation P(X) -> X. The comparison functor is an isomorphism.
/// max_size bounds the base universe (1 to 4).
AdjunctionData build_multimap_instance(int max_size);

/// The identity adjunction on finite sets; monad and Kleisli category are
/// trivial and the comparison functor is the identity.
AdjunctionData build_identity_instance(int max_size);

/// The free/forgetful adjunction into all finite pointed sets (not just the
/// free ones): its monad is the option monad, and the comparison functor
/// fails to be an isomorphism because F misses every pointed set that is
/// not of the free tagged form — the negative instance for the
/// bijective-on-objects criterion.
AdjunctionData build_option_neg_instance(int max_size);

struct InstanceInfo {
  std::string name;
  int default_max_size;
  int max_allowed_size;
};

std::vector<InstanceInfo> registered_instances();

/// Build a registered instance by name ("powerset", "identity",
/// "option-neg"); max_size <= 0 selects the instance default. Throws
/// std::invalid_argument for unknown names or out-of-range sizes.
AdjunctionData make_instance(const std::string& name, int max_size = 0);

/// Sub-carrier used for the brute-force uniqueness search: the objects with
/// at most one element.
std::vector<Obj> uniqueness_subcarrier(const AdjunctionData& adj);

}  // namespace cstar::cat
