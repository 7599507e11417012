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

#include <nlohmann/json.hpp>

#include "cstar/algebra.hpp"
#include "cstar/linear_map.hpp"
#include "cstar/verdict.hpp"

namespace cstar {

class Polynomial;

// Wire formats. Algebras are {"blocks": [n_1, ...]}. Elements are
// {"algebra": ..., "blocks": [block, ...]} with each block a row-major list
// of [re, im] pairs. Maps are {"dom": ..., "cod": ..., "basis_images":
// [element, ...]} with the matrix-unit basis ordered block-major and
// row-major within blocks. Polynomials are coefficient lists of [re, im]
// pairs, lowest degree first.

nlohmann::json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const nlohmann::json& j);

nlohmann::json element_to_json(const Element& e);
Element element_from_json(const nlohmann::json& j);
/// Reads an element whose "algebra" field may be omitted; the given algebra
/// is used (and checked against the field when present).
Element element_from_json(const nlohmann::json& j, const Algebra& algebra);

nlohmann::json map_to_json(const LinearMap& f);
LinearMap map_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const Verdict& v);

nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace cstar
