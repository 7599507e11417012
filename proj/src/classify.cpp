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

#include "cstar/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "cstar/choi.hpp"
#include "cstar/json_io.hpp"
#include "cstar/random.hpp"

namespace cstar {

Verdict check_unital(const LinearMap& f, const Tolerance& tol) {
  const double deviation = distance(f(Element::unit(f.dom())), Element::unit(f.cod()));
  if (tol.close(deviation, 1.0)) return Verdict::pass(deviation);
  return Verdict::fail(deviation, {{"deviation", deviation}});
}

Verdict check_subunital(const LinearMap& f, const Tolerance& tol) {
  return leq(f(Element::unit(f.dom())), Element::unit(f.cod()), tol);
}

Verdict check_involutive(const LinearMap& f, const Tolerance& tol) {
  double worst = 0.0;
  nlohmann::json witness;
  const Algebra& dom = f.dom();
  for (int k = 0; k < dom.num_blocks(); ++k)
    for (int i = 0; i < dom.block_dim(k); ++i)
      for (int j = 0; j < dom.block_dim(k); ++j) {
        const Element e = matrix_unit(dom, k, i, j);
        const double r = distance(f(star(e)), star(f(e)));
        if (r > worst) {
          worst = r;
          witness = {{"block", k}, {"i", i}, {"j", j}, {"residual", r}};
        }
      }
  if (tol.close(worst, 1.0)) return Verdict::pass(worst);
  return Verdict::fail(worst, witness);
}

Verdict check_multiplicative(const LinearMap& f, const Tolerance& tol) {
  double worst = 0.0;
  nlohmann::json witness;
  const Algebra& dom = f.dom();
  const int n = dom.dim();
  std::vector<Element> units;
  units.reserve(static_cast<size_t>(n));
  for (int k = 0; k < dom.num_blocks(); ++k)
    for (int i = 0; i < dom.block_dim(k); ++i)
      for (int j = 0; j < dom.block_dim(k); ++j) units.push_back(matrix_unit(dom, k, i, j));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const Element& ep = units[static_cast<size_t>(p)];
      const Element& eq = units[static_cast<size_t>(q)];
      const double r = distance(f(mul(ep, eq)), mul(f(ep), f(eq)));
      if (r > worst) {
        worst = r;
        witness = {{"p", p}, {"q", q}, {"residual", r}};
      }
    }
  if (tol.close(worst, 1.0)) return Verdict::pass(worst);
  return Verdict::fail(worst, witness);
}

namespace {

/// Rank-one projections swept deterministically per block: coordinate
/// projectors plus the +, i superpositions of every coordinate pair.
std::vector<Element> projection_sweep(const Algebra& a) {
  std::vector<Element> out;
  for (int k = 0; k < a.num_blocks(); ++k) {
    const int n = a.block_dim(k);
    auto push = [&](const Vector& v) {
      std::vector<Matrix> blocks;
      for (int l = 0; l < a.num_blocks(); ++l)
        blocks.push_back(Matrix::Zero(a.block_dim(l), a.block_dim(l)));
      blocks[static_cast<size_t>(k)] = v * v.adjoint() / v.squaredNorm();
      out.emplace_back(a, std::move(blocks));
    };
    for (int i = 0; i < n; ++i) {
      Vector e = Vector::Zero(n);
      e(i) = Complex(1.0, 0.0);
      push(e);
      for (int j = i + 1; j < n; ++j) {
        Vector plus = Vector::Zero(n);
        plus(i) = Complex(1.0, 0.0);
        plus(j) = Complex(1.0, 0.0);
        push(plus);
        Vector phase = Vector::Zero(n);
        phase(i) = Complex(1.0, 0.0);
        phase(j) = Complex(0.0, 1.0);
        push(phase);
      }
    }
  }
  return out;
}

}  // namespace

Verdict check_positive(const LinearMap& f, int n_samples, std::uint64_t seed,
                       const Tolerance& tol) {
  const Algebra& dom = f.dom();
  double min_margin = 0.0;
  bool have_margin = false;
  auto probe = [&](const Element& positive_input) -> Verdict {
    const Verdict out = is_positive_element(f(positive_input), tol);
    if (!have_margin || out.margin < min_margin) {
      min_margin = out.margin;
      have_margin = true;
    }
    if (!out.passed) {
      return Verdict::fail(out.margin,
                           {{"input", element_to_json(positive_input)},
                            {"output_min_eigenvalue", out.margin}});
    }
    return Verdict::pass(out.margin);
  };

  if (dom.commutative()) {
    // The positive cone of C^n is generated by the coordinate projections,
    // so checking them is a complete decision procedure.
    for (int k = 0; k < dom.num_blocks(); ++k) {
      const Verdict v = probe(matrix_unit(dom, k, 0, 0));
      if (!v.passed) {
        Verdict out = v;
        out.witness["coordinate"] = k;
        out.note = "exact (commutative domain)";
        return out;
      }
    }
    return Verdict::pass(min_margin, "exact (commutative domain)");
  }

  for (const Element& p : projection_sweep(dom)) {
    const Verdict v = probe(p);
    if (!v.passed) {
      Verdict out = v;
      out.note = "witness from projection sweep";
      return out;
    }
  }
  Rng rng(seed);
  for (int s = 0; s < n_samples; ++s) {
    const Verdict v = probe(random_positive(dom, rng));
    if (!v.passed) {
      Verdict out = v;
      out.note = "witness from random sampling";
      return out;
    }
  }
  return Verdict::pass(min_margin, "no counterexample found (sampled)");
}

std::string MapClassification::label() const {
  if (miu()) return "MIU";
  if (cpu()) return "CPU";
  if (pu()) return "PU";
  if (psu()) return "PsU";
  return "none";
}

MapClassification classify(const LinearMap& f, const ClassifyOptions& opts) {
  MapClassification c;
  c.unital = check_unital(f, opts.tol);
  c.subunital = check_subunital(f, opts.tol);
  c.involutive = check_involutive(f, opts.tol);
  c.multiplicative = check_multiplicative(f, opts.tol);
  c.positive = check_positive(f, opts.positivity_samples, opts.seed, opts.tol);
  c.completely_positive = check_completely_positive(f, opts.tol);
  return c;
}

Verdict pu_norm_bound_check(const LinearMap& f, int n_samples, std::uint64_t seed,
                            const Tolerance& tol) {
  if (!check_unital(f, tol).passed || !check_positive(f, 50, seed, tol).passed)
    throw std::invalid_argument("pu_norm_bound_check: map is not PU");
  Rng rng(seed);
  double max_ratio = 0.0;
  double worst_margin = 0.0;  // headroom of the factor-4 bound
  bool have_margin = false;
  for (int s = 0; s < n_samples; ++s) {
    const Element c = random_element(f.dom(), rng);
    const double norm_c = operator_norm(c);
    if (norm_c == 0.0) continue;
    const double norm_fc = operator_norm(f(c));
    max_ratio = std::max(max_ratio, norm_fc / norm_c);
    const double margin = 4.0 * norm_c - norm_fc;
    if (!have_margin || margin < worst_margin) {
      worst_margin = margin;
      have_margin = true;
    }
    if (norm_fc > 4.0 * norm_c + tol.bound(norm_c)) {
      return Verdict::fail(margin, {{"element", element_to_json(c)},
                                    {"norm_ratio", norm_fc / norm_c}});
    }
    // The decomposition that yields the bound: each positive part is mapped
    // contractively.
    const JordanParts parts = jordan_decompose(c);
    for (const Element* part : {&parts.pos_re, &parts.neg_re, &parts.pos_im, &parts.neg_im}) {
      const double norm_part = operator_norm(*part);
      const double norm_fpart = operator_norm(f(*part));
      if (norm_fpart > norm_part + tol.bound(1.0 + norm_part)) {
        return Verdict::fail(norm_part - norm_fpart,
                             {{"element", element_to_json(c)},
                              {"part_norm", norm_part},
                              {"image_norm", norm_fpart}},
                             "positive part mapped expansively");
      }
    }
  }
  return Verdict::pass(worst_margin,
                       "max ||f(c)||/||c|| = " + std::to_string(max_ratio) +
                           " over " + std::to_string(n_samples) + " samples");
}

}  // namespace cstar
