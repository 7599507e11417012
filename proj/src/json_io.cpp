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

#include "cstar/json_io.hpp"

#include <stdexcept>

#include "cstar/polynomial.hpp"

namespace cstar {

namespace {

nlohmann::json complex_to_json(Complex z) { return {z.real(), z.imag()}; }

Complex complex_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::invalid_argument("expected a complex number as [re, im]");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

}  // namespace

nlohmann::json algebra_to_json(const Algebra& a) {
  nlohmann::json j;
  j["blocks"] = a.block_dims();
  return j;
}

Algebra algebra_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_array())
    throw std::invalid_argument("algebra: expected {\"blocks\": [int, ...]}");
  std::vector<int> dims;
  for (const auto& d : j["blocks"]) {
    if (!d.is_number_integer() || d.get<int>() < 1)
      throw std::invalid_argument("algebra: block dimensions must be positive integers");
    dims.push_back(d.get<int>());
  }
  return Algebra(std::move(dims));
}

nlohmann::json element_to_json(const Element& e) {
  nlohmann::json j;
  j["algebra"] = algebra_to_json(e.parent());
  nlohmann::json blocks = nlohmann::json::array();
  for (const Matrix& m : e.blocks()) {
    nlohmann::json entries = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index k = 0; k < m.cols(); ++k) entries.push_back(complex_to_json(m(i, k)));
    blocks.push_back(std::move(entries));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

namespace {

Element element_from_json_impl(const nlohmann::json& j, const Algebra& algebra) {
  if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_array())
    throw std::invalid_argument("element: expected {\"algebra\": ..., \"blocks\": ...}");
  const nlohmann::json& blocks = j["blocks"];
  if (static_cast<int>(blocks.size()) != algebra.num_blocks())
    throw std::invalid_argument("element: block count does not match the algebra");
  std::vector<Matrix> out;
  out.reserve(blocks.size());
  for (int k = 0; k < algebra.num_blocks(); ++k) {
    const int n = algebra.block_dim(k);
    const nlohmann::json& entries = blocks[static_cast<size_t>(k)];
    if (!entries.is_array() || static_cast<int>(entries.size()) != n * n)
      throw std::invalid_argument("element: block " + std::to_string(k) + " needs " +
                                  std::to_string(n * n) + " row-major entries");
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < n; ++c)
        m(i, c) = complex_from_json(entries[static_cast<size_t>(i * n + c)]);
    out.push_back(std::move(m));
  }
  return Element(algebra, std::move(out));
}

}  // namespace

Element element_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("algebra"))
    throw std::invalid_argument("element: missing \"algebra\" field");
  return element_from_json_impl(j, algebra_from_json(j["algebra"]));
}

Element element_from_json(const nlohmann::json& j, const Algebra& algebra) {
  if (j.is_object() && j.contains("algebra")) {
    const Algebra declared = algebra_from_json(j["algebra"]);
    if (declared != algebra)
      throw std::invalid_argument("element: declared algebra does not match");
  }
  return element_from_json_impl(j, algebra);
}

nlohmann::json map_to_json(const LinearMap& f) {
  nlohmann::json j;
  j["dom"] = algebra_to_json(f.dom());
  j["cod"] = algebra_to_json(f.cod());
  nlohmann::json images = nlohmann::json::array();
  for (const Element& e : f.basis_images()) images.push_back(element_to_json(e));
  j["basis_images"] = std::move(images);
  return j;
}

LinearMap map_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dom") || !j.contains("cod") ||
      !j.contains("basis_images") || !j["basis_images"].is_array())
    throw std::invalid_argument(
        "map: expected {\"dom\": ..., \"cod\": ..., \"basis_images\": [...]}");
  Algebra dom = algebra_from_json(j["dom"]);
  Algebra cod = algebra_from_json(j["cod"]);
  const nlohmann::json& images_json = j["basis_images"];
  if (static_cast<int>(images_json.size()) != dom.dim())
    throw std::invalid_argument("map: need exactly " + std::to_string(dom.dim()) +
                                " basis images (one per matrix unit of the domain)");
  std::vector<Element> images;
  images.reserve(images_json.size());
  for (const auto& image : images_json) images.push_back(element_from_json(image, cod));
  return LinearMap(std::move(dom), std::move(cod), std::move(images));
}

nlohmann::json verdict_to_json(const Verdict& v) {
  nlohmann::json j;
  j["passed"] = v.passed;
  j["margin"] = v.margin;
  j["witness"] = v.witness;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

nlohmann::json polynomial_to_json(const Polynomial& p) {
  nlohmann::json j = nlohmann::json::array();
  for (auto c : p.coefficients()) j.push_back(complex_to_json(c));
  return j;
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial: expected [[re, im], ...]");
  std::vector<Complex> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(complex_from_json(c));
  return Polynomial(std::move(coeffs));
}

}  // namespace cstar
