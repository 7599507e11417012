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

#include "cstar/instances.hpp"

#include <algorithm>
#include <cmath>

namespace cstar::cat {

std::string set_id(std::vector<std::string> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::string out = "{";
  for (size_t i = 0; i < elements.size(); ++i) {
    if (i) out += ",";
    out += elements[i];
  }
  out += "}";
  return out;
}

std::vector<std::string> set_elements(const std::string& id) {
  if (id.size() < 2 || id.front() != '{' || id.back() != '}')
    throw std::invalid_argument("set_elements: malformed set id " + id);
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (size_t i = 1; i + 1 < id.size(); ++i) {
    const char c = id[i];
    if (c == '{') ++depth;
    if (c == '}') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

std::string pointed_id(const std::vector<std::string>& elements,
                       const std::string& point) {
  return "(" + set_id(elements) + ";" + point + ")";
}

std::pair<std::string, std::string> pointed_parts(const std::string& id) {
  if (id.size() < 4 || id.front() != '(' || id.back() != ')')
    throw std::invalid_argument("pointed_parts: malformed pointed id " + id);
  const size_t split = id.rfind(';');
  if (split == std::string::npos)
    throw std::invalid_argument("pointed_parts: missing point in " + id);
  return {id.substr(1, split - 1), id.substr(split + 1, id.size() - split - 2)};
}

std::vector<std::string> power_set_ids(const std::vector<std::string>& elements) {
  if (elements.size() >= 21 ||
      (1L << elements.size()) > kEnumerationCap)
    throw SizeBoundError("power set of " + std::to_string(elements.size()) +
                         " elements exceeds the enumeration cap");
  const size_t n = elements.size();
  std::vector<std::string> out;
  out.reserve(static_cast<size_t>(1) << n);
  for (size_t mask = 0; mask < (static_cast<size_t>(1) << n); ++mask) {
    std::vector<std::string> subset;
    for (size_t i = 0; i < n; ++i)
      if (mask & (static_cast<size_t>(1) << i)) subset.push_back(elements[i]);
    out.push_back(set_id(std::move(subset)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

/// Enumerate all assignments table: domain -> one value from the per-slot
/// choice lists, guarded by the cap.
template <typename Fn>
void for_assignments(const std::vector<std::string>& domain,
                     const std::vector<std::vector<std::string>>& choices, Fn&& fn) {
  double total = 1.0;
  for (const auto& c : choices) total *= static_cast<double>(c.size());
  if (total > static_cast<double>(kEnumerationCap))
    throw SizeBoundError("hom-set enumeration exceeds the cap");
  if (domain.empty()) {
    fn(std::map<std::string, std::vector<std::string>>{});
    return;
  }
  for (const auto& c : choices)
    if (c.empty()) return;  // no assignment exists
  std::vector<size_t> index(domain.size(), 0);
  while (true) {
    std::map<std::string, std::vector<std::string>> table;
    for (size_t i = 0; i < domain.size(); ++i)
      table[domain[i]] = {choices[i][index[i]]};
    fn(std::move(table));
    size_t i = 0;
    while (i < domain.size()) {
      if (++index[i] < choices[i].size()) break;
      index[i] = 0;
      ++i;
    }
    if (i == domain.size()) break;
  }
}

std::vector<std::string> sorted_union(const std::vector<std::string>& a,
                                      const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

CategoryPtr make_set_category(std::vector<Obj> carrier) {
  auto cat = std::make_shared<FiniteCategory>();
  cat->name = "Set";
  cat->objects = std::move(carrier);
  cat->elements = [](const Obj& x) { return set_elements(x); };
  cat->identity = [](const Obj& x) {
    Mor id{x, x, {}};
    for (const std::string& e : set_elements(x)) id.table[e] = {e};
    return id;
  };
  cat->compose = [](const Mor& g, const Mor& f) {
    Mor out{f.dom, g.cod, {}};
    for (const auto& [x, via] : f.table) out.table[x] = g.table.at(via.at(0));
    return out;
  };
  cat->homs = [](const Obj& x, const Obj& y) {
    const std::vector<std::string> dom = set_elements(x);
    const std::vector<std::string> cod = set_elements(y);
    std::vector<Mor> out;
    for_assignments(dom, std::vector<std::vector<std::string>>(dom.size(), cod),
                    [&](std::map<std::string, std::vector<std::string>> table) {
                      out.push_back(Mor{x, y, std::move(table)});
                    });
    return out;
  };
  return cat;
}

CategoryPtr make_multimap_category(std::vector<Obj> carrier) {
  auto cat = std::make_shared<FiniteCategory>();
  cat->name = "Set_multi";
  cat->objects = std::move(carrier);
  cat->elements = [](const Obj& x) { return set_elements(x); };
  cat->identity = [](const Obj& x) {
    Mor id{x, x, {}};
    for (const std::string& e : set_elements(x)) id.table[e] = {e};
    return id;
  };
  cat->compose = [](const Mor& g, const Mor& f) {
    Mor out{f.dom, g.cod, {}};
    for (const auto& [x, mids] : f.table) {
      std::vector<std::string> image;
      for (const std::string& y : mids) image = sorted_union(image, g.table.at(y));
      out.table[x] = std::move(image);
    }
    return out;
  };
  cat->homs = [](const Obj& x, const Obj& y) {
    const std::vector<std::string> dom = set_elements(x);
    const std::vector<std::string> cod = set_elements(y);
    // One choice per domain element: any subset of the codomain.
    std::vector<std::string> subset_ids = power_set_ids(cod);
    double total = std::pow(static_cast<double>(subset_ids.size()),
                            static_cast<double>(dom.size()));
    if (total > static_cast<double>(kEnumerationCap))
      throw SizeBoundError("multimap hom-set exceeds the enumeration cap");
    std::vector<Mor> out;
    std::vector<size_t> index(dom.size(), 0);
    while (true) {
      Mor m{x, y, {}};
      for (size_t i = 0; i < dom.size(); ++i)
        m.table[dom[i]] = set_elements(subset_ids[index[i]]);
      out.push_back(std::move(m));
      if (dom.empty()) break;
      size_t i = 0;
      while (i < dom.size()) {
        if (++index[i] < subset_ids.size()) break;
        index[i] = 0;
        ++i;
      }
      if (i == dom.size()) break;
    }
    return out;
  };
  return cat;
}

CategoryPtr make_pointed_category(std::vector<Obj> carrier) {
  auto cat = std::make_shared<FiniteCategory>();
  cat->name = "Set_*";
  cat->objects = std::move(carrier);
  cat->elements = [](const Obj& x) { return set_elements(pointed_parts(x).first); };
  cat->identity = [](const Obj& x) {
    Mor id{x, x, {}};
    for (const std::string& e : set_elements(pointed_parts(x).first)) id.table[e] = {e};
    return id;
  };
  cat->compose = [](const Mor& g, const Mor& f) {
    Mor out{f.dom, g.cod, {}};
    for (const auto& [x, via] : f.table) out.table[x] = g.table.at(via.at(0));
    return out;
  };
  cat->homs = [](const Obj& x, const Obj& y) {
    const auto [dom_set, dom_point] = pointed_parts(x);
    const auto [cod_set, cod_point] = pointed_parts(y);
    const std::vector<std::string> dom = set_elements(dom_set);
    const std::vector<std::string> cod = set_elements(cod_set);
    std::vector<std::vector<std::string>> choices;
    choices.reserve(dom.size());
    for (const std::string& e : dom)
      choices.push_back(e == dom_point ? std::vector<std::string>{cod_point} : cod);
    std::vector<Mor> out;
    for_assignments(dom, choices,
                    [&](std::map<std::string, std::vector<std::string>> table) {
                      out.push_back(Mor{x, y, std::move(table)});
                    });
    return out;
  };
  return cat;
}

namespace {

std::vector<std::string> base_universe(int max_size) {
  if (max_size < 1 || max_size > 4)
    throw std::invalid_argument("instance size must lie between 1 and 4");
  const std::vector<std::string> names{"a", "b", "c", "d"};
  return {names.begin(), names.begin() + max_size};
}

std::vector<Obj> subset_objects(int max_size) {
  return power_set_ids(base_universe(max_size));
}

}  // namespace

AdjunctionData build_multimap_instance(int max_size) {
  const std::vector<Obj> carrier = subset_objects(max_size);
  AdjunctionData adj;
  adj.name = "powerset";
  adj.C = make_set_category(carrier);
  adj.D = make_multimap_category(carrier);

  adj.F = FunctorData{
      "F (graph embedding)", adj.C, adj.D, [](const Obj& x) { return x; },
      [](const Mor& f) {
        Mor out{f.dom, f.cod, {}};
        for (const auto& [x, y] : f.table) out.table[x] = y;  // already singleton
        return out;
      }};

  adj.U = FunctorData{
      "U (image map)", adj.D, adj.C,
      [](const Obj& x) { return set_id(power_set_ids(set_elements(x))); },
      [](const Mor& g) {
        Mor out{set_id(power_set_ids(set_elements(g.dom))),
                set_id(power_set_ids(set_elements(g.cod))), {}};
        for (const std::string& subset : power_set_ids(set_elements(g.dom))) {
          std::vector<std::string> image;
          for (const std::string& x : set_elements(subset))
            image = sorted_union(image, g.table.at(x));
          out.table[subset] = {set_id(std::move(image))};
        }
        return out;
      }};

  adj.unit = [U = adj.U.on_obj](const Obj& x) {
    Mor eta{x, U(x), {}};
    for (const std::string& e : set_elements(x))
      eta.table[e] = {set_id({e})};
    return eta;
  };
  adj.counit = [U = adj.U.on_obj](const Obj& x) {
    // Membership relation P(X) -> X.
    Mor eps{U(x), x, {}};
    for (const std::string& subset : power_set_ids(set_elements(x)))
      eps.table[subset] = set_elements(subset);
    return eps;
  };
  return adj;
}

AdjunctionData build_identity_instance(int max_size) {
  const std::vector<Obj> carrier = subset_objects(max_size);
  AdjunctionData adj;
  adj.name = "identity";
  adj.C = make_set_category(carrier);
  adj.D = make_set_category(carrier);
  const auto identity_functor = [](CategoryPtr src, CategoryPtr dst) {
    return FunctorData{"Id", std::move(src), std::move(dst),
                       [](const Obj& x) { return x; },
                       [](const Mor& f) { return f; }};
  };
  adj.F = identity_functor(adj.C, adj.D);
  adj.U = identity_functor(adj.D, adj.C);
  adj.unit = [C = adj.C](const Obj& x) { return C->identity(x); };
  adj.counit = [D = adj.D](const Obj& x) { return D->identity(x); };
  return adj;
}

AdjunctionData build_option_neg_instance(int max_size) {
  const std::vector<Obj> set_carrier = subset_objects(max_size);

  // Pointed carrier: every pointed set over the plain universe, plus the
  // free (tagged) objects so that only part of the carrier is missed.
  std::vector<Obj> pointed_carrier;
  for (const Obj& s : set_carrier) {
    const std::vector<std::string> elements = set_elements(s);
    for (const std::string& p : elements) pointed_carrier.push_back(pointed_id(elements, p));
  }
  const auto free_obj = [](const Obj& x) {
    std::vector<std::string> elements;
    for (const std::string& e : set_elements(x)) elements.push_back("i(" + e + ")");
    elements.push_back("bot");
    return pointed_id(elements, "bot");
  };
  for (const Obj& s : set_carrier) pointed_carrier.push_back(free_obj(s));
  std::sort(pointed_carrier.begin(), pointed_carrier.end());
  pointed_carrier.erase(std::unique(pointed_carrier.begin(), pointed_carrier.end()),
                        pointed_carrier.end());

  AdjunctionData adj;
  adj.name = "option-neg";
  adj.C = make_set_category(set_carrier);
  adj.D = make_pointed_category(std::move(pointed_carrier));

  adj.F = FunctorData{"F (free pointed set)", adj.C, adj.D, free_obj,
                      [free_obj](const Mor& f) {
                        Mor out{free_obj(f.dom), free_obj(f.cod), {}};
                        out.table["bot"] = {"bot"};
                        for (const auto& [x, y] : f.table)
                          out.table["i(" + x + ")"] = {"i(" + y.at(0) + ")"};
                        return out;
                      }};
  adj.U = FunctorData{"U (forget point)", adj.D, adj.C,
                      [](const Obj& d) { return pointed_parts(d).first; },
                      [](const Mor& g) {
                        return Mor{pointed_parts(g.dom).first,
                                   pointed_parts(g.cod).first, g.table};
                      }};
  adj.unit = [free_obj](const Obj& x) {
    Mor eta{x, pointed_parts(free_obj(x)).first, {}};
    for (const std::string& e : set_elements(x)) eta.table[e] = {"i(" + e + ")"};
    return eta;
  };
  adj.counit = [free_obj](const Obj& d) {
    const auto [set_part, point] = pointed_parts(d);
    const Obj fu = free_obj(set_part);
    Mor eps{fu, d, {}};
    eps.table["bot"] = {point};
    for (const std::string& e : set_elements(set_part))
      eps.table["i(" + e + ")"] = {e};
    return eps;
  };
  return adj;
}

std::vector<InstanceInfo> registered_instances() {
  // Defaults keep every law suite inside the enumeration cap: the powerset
  // multiplication law needs the triple powerset, which explodes past base
  // sets of two elements, and the pointed carrier at size 3 already has
  // ~18M composable triples.
  return {{"powerset", 2, 4}, {"identity", 3, 4}, {"option-neg", 2, 4}};
}

AdjunctionData make_instance(const std::string& name, int max_size) {
  for (const InstanceInfo& info : registered_instances()) {
    if (info.name != name) continue;
    const int size = max_size <= 0 ? info.default_max_size : max_size;
    if (size < 1 || size > info.max_allowed_size)
      throw std::invalid_argument("instance " + name + ": size must lie in 1.." +
                                  std::to_string(info.max_allowed_size));
    if (name == "powerset") return build_multimap_instance(size);
    if (name == "identity") return build_identity_instance(size);
    return build_option_neg_instance(size);
  }
  throw std::invalid_argument("unknown instance '" + name +
                              "' (expected powerset, identity or option-neg)");
}

std::vector<Obj> uniqueness_subcarrier(const AdjunctionData& adj) {
  std::vector<Obj> out;
  for (const Obj& x : adj.C->objects)
    if (adj.C->elements(x).size() <= 1) out.push_back(x);
  return out;
}

}  // namespace cstar::cat
