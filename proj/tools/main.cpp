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

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cstar/category.hpp"
#include "cstar/choi.hpp"
#include "cstar/classify.hpp"
#include "cstar/constructions.hpp"
#include "cstar/covariance.hpp"
#include "cstar/gelfand.hpp"
#include "cstar/instances.hpp"
#include "cstar/json_io.hpp"
#include "cstar/random.hpp"
#include "cstar/report.hpp"
#include "cstar/states.hpp"
#include "cstar/zoo.hpp"

namespace {

using namespace cstar;

constexpr int kExitInputError = 2;

struct GlobalOptions {
  double tol_abs = 1e-9;
  double tol_rel = 1e-9;
  std::uint64_t seed = 42;
  bool seed_set_on_cli = false;
  bool pretty = false;

  Tolerance tol() const { return Tolerance{tol_abs, tol_rel}; }
  std::uint64_t effective_seed() const {
    if (seed_set_on_cli) return seed;
    if (const char* env = std::getenv("WORKBENCH_SEED")) {
      try {
        return std::stoull(env);
      } catch (const std::exception&) {
        throw std::invalid_argument("WORKBENCH_SEED is not a number: " +
                                    std::string(env));
      }
    }
    return seed;
  }
};

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

int emit(const RunReport& report, const GlobalOptions& opts) {
  if (opts.pretty)
    std::cout << report.pretty();
  else
    std::cout << report.to_json().dump(2) << "\n";
  return report.exit_code();
}

std::string echo_command(int argc, char** argv) {
  std::ostringstream out;
  for (int i = 0; i < argc; ++i) {
    if (i) out << " ";
    out << argv[i];
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// algebra check

int cmd_algebra_check(const std::string& path, const GlobalOptions& opts,
                      const std::string& command) {
  const nlohmann::json j = load_json(path);
  RunReport report(command, opts.effective_seed(), opts.tol());
  if (j.contains("basis_images")) {
    throw std::invalid_argument(path + " looks like a map; use `map classify`");
  }
  if (j.contains("blocks") && !j["blocks"].empty() && j["blocks"][0].is_array()) {
    // Element file: validate conformance and the *-algebra axioms.
    const Element e = element_from_json(j);
    report.set_payload("algebra", algebra_to_json(e.parent()));
    report.set_payload("kind", "element");
    report.run_check("star involution", [&] {
      const double r = distance(star(star(e)), e);
      return r == 0.0 ? Verdict::pass(0.0, "exact")
                      : Verdict::fail(r, {{"residual", r}});
    });
    report.run_check("cstar identity", [&] {
      const double norm = operator_norm(e);
      const double r = std::abs(operator_norm(mul(star(e), e)) - norm * norm);
      return r <= opts.tol().bound(1.0 + norm * norm)
                 ? Verdict::pass(r)
                 : Verdict::fail(r, {{"residual", r}});
    });
    report.run_check("norm is finite", [&] {
      const double norm = operator_norm(e);
      return std::isfinite(norm) ? Verdict::pass(norm) : Verdict::fail(norm);
    });
  } else {
    const Algebra a = algebra_from_json(j);
    report.set_payload("kind", "algebra");
    report.set_payload("description", a.describe());
    report.set_payload("dim", a.dim());
    report.set_payload("rep_dim", a.rep_dim());
    report.set_payload("commutative", a.commutative());
    report.run_check("well-formed", [&] {
      return Verdict::pass(static_cast<double>(a.dim()),
                           a.trivial() ? "trivial algebra" : a.describe());
    });
  }
  return emit(report, opts);
}

// ---------------------------------------------------------------------------
// map classify / map choi

int cmd_map_classify(const std::string& path, const GlobalOptions& opts,
                     const std::string& command) {
  const LinearMap f = map_from_json(load_json(path));
  RunReport report(command, opts.effective_seed(), opts.tol());
  ClassifyOptions copts;
  copts.tol = opts.tol();
  copts.seed = opts.effective_seed();
  const MapClassification c = classify(f, copts);
  report.add_check("unital", c.unital);
  report.add_check("subunital", c.subunital);
  report.add_check("involutive", c.involutive);
  report.add_check("multiplicative", c.multiplicative);
  report.add_check("positive", c.positive);
  report.add_check("completely positive", c.completely_positive);
  report.set_payload("label", c.label());
  report.set_payload("dom", algebra_to_json(f.dom()));
  report.set_payload("cod", algebra_to_json(f.cod()));
  const ChoiData data = choi(f);
  report.set_payload("choi_eigenvalues", data.all_eigenvalues());
  return emit(report, opts);
}

int cmd_map_choi(const std::string& path, const GlobalOptions& opts,
                 const std::string& command) {
  const LinearMap f = map_from_json(load_json(path));
  RunReport report(command, opts.effective_seed(), opts.tol());
  const ChoiData data = choi(f);
  nlohmann::json per_block = nlohmann::json::array();
  for (const Eigen::VectorXd& vals : data.eigenvalues) {
    nlohmann::json block = nlohmann::json::array();
    for (int i = 0; i < vals.size(); ++i) block.push_back(vals(i));
    per_block.push_back(std::move(block));
  }
  report.set_payload("eigenvalues_per_block", std::move(per_block));
  report.set_payload("min_eigenvalue", data.min_eigenvalue);
  report.run_check("choi hermitian", [&] {
    return opts.tol().close(data.hermiticity_defect, 1.0)
               ? Verdict::pass(data.hermiticity_defect)
               : Verdict::fail(data.hermiticity_defect);
  });
  report.run_check("completely positive",
                   [&] { return check_completely_positive(f, opts.tol()); });
  return emit(report, opts);
}

// ---------------------------------------------------------------------------
// verify <example>

void verify_c(RunReport& report, const GlobalOptions& opts) {
  // The scalars are initial: the only unital map out of C is lambda * 1,
  // and it is automatically a *-homomorphism.
  for (const Algebra& target : {Algebra::full_matrix(2), Algebra({2, 1}),
                                Algebra::scalars(3)}) {
    const LinearMap sigma = unitization(target);
    const std::string suffix = " (into " + target.describe() + ")";
    report.run_check("unitization is MIU" + suffix, [&] {
      const MapClassification c = classify(sigma, {opts.tol()});
      return c.miu() ? Verdict::pass(0.0, "label " + c.label())
                     : Verdict::fail(0.0, {{"label", c.label()}});
    });
    report.run_check("factorization is the identity" + suffix, [&] {
      // sigma-hat o id = sigma forces sigma-hat = sigma.
      const LinearMap sigma_hat = compose(sigma, identity_map(Algebra::scalars(1)));
      const double r = map_distance(sigma_hat, sigma);
      return r == 0.0 ? Verdict::pass(0.0, "exact") : Verdict::fail(r);
    });
  }
}

void verify_c2(RunReport& report, const GlobalOptions& opts, const std::string& codomain,
               int degree, int trials) {
  Algebra cod = Algebra({2, 3});
  if (codomain == "M2")
    cod = Algebra::full_matrix(2);
  else if (codomain == "M3")
    cod = Algebra::full_matrix(3);
  else if (codomain == "M2+M3")
    cod = Algebra({2, 3});
  else if (codomain == "C2")
    cod = Algebra::scalars(2);
  else if (!codomain.empty())
    throw std::invalid_argument("unknown codomain " + codomain +
                                " (expected M2, M3, M2+M3 or C2)");
  Rng rng(opts.effective_seed());
  const Algebra c2 = Algebra::scalars(2);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Element a = random_contraction_01(cod, rng);
    const Element complement = sub(Element::unit(cod), a);
    const LinearMap sigma(c2, cod, {a, complement});
    const C2Factorization fact = c2_factorization(sigma, degree, opts.tol());
    worst = std::max(worst, fact.verdict.margin);
    if (!fact.verdict.passed) {
      report.add_check("factorization trial " + std::to_string(t), fact.verdict);
      return;
    }
  }
  report.add_check(
      "factorization over " + std::to_string(trials) + " random maps",
      Verdict::pass(worst, "max residual across grid, multiplicativity, "
                           "involution and unit checks"));
}

void verify_c3(RunReport& report) {
  const C3Witness w = c3_witness();
  for (const NamedVerdict& nv : w.checks) report.add_check(nv.name, nv.verdict);
  report.set_payload("commutator_norm", w.commutator_norm);
  report.set_payload("witness", w.report());
}

void verify_covariance(RunReport& report, const GlobalOptions& opts,
                       const std::string& channel) {
  if (channel == "unitary" || channel.empty()) {
    Rng rng(opts.effective_seed() + 1);
    const LinearMap t = unitary_conjugation(Algebra::full_matrix(3),
                                            {random_unitary(3, rng)});
    report.run_check("unitary conjugation preserves covariance", [&] {
      return covariance_preservation_test(t, 50, 20, opts.effective_seed(), opts.tol());
    });
  } else if (channel == "depolarizing") {
    const LinearMap t = depolarizing_channel(2, 0.5);
    report.run_check("depolarizing channel: violation found", [&] {
      Tolerance detect = opts.tol();
      const Verdict v = covariance_preservation_test(t, 50, 20, opts.effective_seed(),
                                                     detect);
      // The channel is not multiplicative, so the detector must find a
      // violating triple; detection is the pass.
      if (!v.passed)
        return Verdict::pass(v.margin, "violation of magnitude " +
                                           std::to_string(v.margin) + " found");
      return Verdict::fail(v.margin, nullptr, "expected a violation, none found");
    });
  } else {
    throw std::invalid_argument("unknown channel " + channel +
                                " (expected unitary or depolarizing)");
  }
}

void verify_stat_c2(RunReport& report, const GlobalOptions& opts) {
  report.run_check("grid states are states", [&] {
    double min_margin = 1.0;
    for (int i = 0; i <= 20; ++i) {
      const StateSample s = state_from_x(i / 20.0);
      const Verdict v = is_state(s.functional, opts.tol());
      if (!v.passed) return v;
      min_margin = std::min(min_margin, v.margin);
    }
    return Verdict::pass(min_margin, "21 grid points");
  });
  report.run_check("x = 1 and x = 0 are the coordinate characters", [&] {
    const auto chars = characters(Algebra::scalars(2));
    const double r1 = map_distance(state_from_x(1.0).functional, chars[0].functional);
    const double r0 = map_distance(state_from_x(0.0).functional, chars[1].functional);
    const double r = std::max(r0, r1);
    return r == 0.0 ? Verdict::pass(0.0, "exact") : Verdict::fail(r);
  });
  report.run_check("x |-> state is injective on the grid", [&] {
    const Element e1 = matrix_unit(Algebra::scalars(2), 0, 0, 0);
    double min_gap = 1.0;
    for (int i = 0; i <= 20; ++i)
      for (int j = i + 1; j <= 20; ++j) {
        const double gap = std::abs(state_from_x(i / 20.0)(e1) -
                                    state_from_x(j / 20.0)(e1));
        min_gap = std::min(min_gap, gap);
      }
    return min_gap > 0.0 ? Verdict::pass(min_gap, "distinguished on (1, 0)")
                         : Verdict::fail(min_gap);
  });
}

void verify_product(RunReport& report, const GlobalOptions& opts) {
  const Algebra m2 = Algebra::full_matrix(2);
  const Algebra c1 = Algebra::scalars(1);
  const DirectSum sum = direct_sum({m2, c1});
  Rng rng(opts.effective_seed());

  report.run_check("sup norm law", [&] {
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
      const Element x = random_element(sum.sum, rng);
      double blockwise = 0.0;
      for (size_t k = 0; k < sum.project.size(); ++k)
        blockwise = std::max(blockwise, operator_norm(sum.project[k](x)));
      worst = std::max(worst, std::abs(operator_norm(x) - blockwise));
    }
    return opts.tol().close(worst, 1.0) ? Verdict::pass(worst) : Verdict::fail(worst);
  });
  report.run_check("injections are isometric", [&] {
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
      const Element x = random_element(m2, rng);
      worst = std::max(worst,
                       std::abs(operator_norm(sum.inject[0](x)) - operator_norm(x)));
    }
    return worst == 0.0 ? Verdict::pass(0.0, "exact") : Verdict::fail(worst);
  });
  report.run_check("projections are MIU", [&] {
    for (size_t k = 0; k < sum.project.size(); ++k) {
      const MapClassification c = classify(sum.project[k], {opts.tol()});
      if (!c.miu()) return Verdict::fail(0.0, {{"projection", k}, {"label", c.label()}});
    }
    return Verdict::pass(0.0);
  });
  report.run_check("tupling satisfies the projection equations", [&] {
    const Algebra dom = Algebra::scalars(2);
    Rng local(opts.effective_seed() + 7);
    const LinearMap f1 = random_pu_map(dom, m2, local);
    const LinearMap f2 = random_pu_map(dom, c1, local);
    const LinearMap tup = tuple_map(sum, {f1, f2});
    const double r = std::max(map_distance(compose(sum.project[0], tup), f1),
                              map_distance(compose(sum.project[1], tup), f2));
    return r == 0.0 ? Verdict::pass(0.0, "exact") : Verdict::fail(r);
  });
}

void verify_equaliser(RunReport& report, const GlobalOptions& opts) {
  const Algebra c2 = Algebra::scalars(2);
  const Algebra m2 = Algebra::full_matrix(2);

  report.run_check("equaliser of id and swap on C^2 is the diagonal", [&] {
    const Equaliser eq =
        equaliser(identity_map(c2), block_embedding(c2, c2, {{0, 1}, {1, 0}}),
                  opts.tol());
    if (eq.view.subspace_dim() != 1)
      return Verdict::fail(eq.view.subspace_dim(),
                           {{"dim", eq.view.subspace_dim()}});
    return eq.view.verify_closure(opts.tol());
  });
  report.run_check("equaliser refuses non-MIU maps", [&] {
    try {
      equaliser(identity_map(m2), transpose_map(m2), opts.tol());
      return Verdict::fail(0.0, nullptr, "transpose was accepted");
    } catch (const std::invalid_argument&) {
      return Verdict::pass(0.0, "transpose rejected: not multiplicative");
    }
  });
  report.run_check("factorization through the equaliser", [&] {
    const Algebra m2m2({2, 2});
    const LinearMap f = identity_map(m2m2);
    const LinearMap g = block_embedding(m2m2, m2m2, {{0, 1}, {1, 0}});
    const Equaliser eq = equaliser(f, g, opts.tol());
    // d lands in the equaliser {(a, a)} by construction.
    Rng rng(opts.effective_seed());
    const LinearMap phi = random_state(m2, rng);
    const Element p = random_contraction_01(m2, rng);
    Matrix action = Matrix::Zero(m2m2.dim(), m2.dim());
    const Element pp(m2m2, {p.block(0), p.block(0)});
    const Element cc(m2m2, {Matrix::Identity(2, 2) - p.block(0),
                            Matrix::Identity(2, 2) - p.block(0)});
    Rng rng2(opts.effective_seed() + 3);
    const LinearMap psi = random_state(m2, rng2);
    action = pp.coords() * phi.coord_matrix() + cc.coords() * psi.coord_matrix();
    const LinearMap d = LinearMap::from_coord_matrix(m2, m2m2, action);
    const EqualiserFactorization fact = factor_through_equaliser(eq, d, opts.tol());
    return fact.verdict;
  });
}

int cmd_verify(const std::string& name, const GlobalOptions& opts,
               const std::string& command, const std::string& codomain, int degree,
               int trials, const std::string& channel) {
  RunReport report(command, opts.effective_seed(), opts.tol());
  if (name == "c")
    verify_c(report, opts);
  else if (name == "c2")
    verify_c2(report, opts, codomain, degree, trials);
  else if (name == "c3")
    verify_c3(report);
  else if (name == "covariance")
    verify_covariance(report, opts, channel);
  else if (name == "stat-c2")
    verify_stat_c2(report, opts);
  else if (name == "product")
    verify_product(report, opts);
  else if (name == "equaliser")
    verify_equaliser(report, opts);
  else
    throw std::invalid_argument(
        "unknown example '" + name +
        "' (expected c, c2, c3, covariance, stat-c2, product or equaliser)");
  return emit(report, opts);
}

// ---------------------------------------------------------------------------
// category laws

int cmd_category_laws(const std::string& instance, int max_size,
                      const GlobalOptions& opts, const std::string& command) {
  const cat::AdjunctionData adj = cat::make_instance(instance, max_size);
  RunReport report(command, opts.effective_seed(), opts.tol());
  report.set_payload("instance", instance);
  report.set_payload("objects", adj.C->objects);
  const auto started = std::chrono::steady_clock::now();
  std::vector<NamedVerdict> results =
      cat::full_law_suite(adj, cat::uniqueness_subcarrier(adj));
  const double total_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - started)
                              .count();
  for (NamedVerdict& nv : results) report.add_check(nv.name, nv.verdict);
  report.set_payload("suite_wall_ms_bucket",
                     total_ms < 1000.0 ? "under 1s" : "over 1s");
  return emit(report, opts);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-dimensional operator algebra and Kleisli workbench"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  GlobalOptions opts;
  app.add_option("--tol", opts.tol_abs, "absolute tolerance")->capture_default_str();
  app.add_option("--tol-rel", opts.tol_rel, "relative tolerance")
      ->capture_default_str();
  auto* seed_opt =
      app.add_option("--seed", opts.seed, "random seed (fallback: WORKBENCH_SEED)")
          ->capture_default_str();
  app.add_flag("--pretty", opts.pretty, "human-readable table instead of JSON");

  // algebra check <file>
  auto* algebra = app.add_subcommand("algebra", "algebra and element utilities");
  auto* algebra_check =
      algebra->add_subcommand("check", "validate an algebra or element file");
  std::string algebra_path;
  algebra_check->add_option("file", algebra_path, "algebra.json or element.json")
      ->required();

  // map classify <file> | map choi <file>
  auto* map_cmd = app.add_subcommand("map", "linear map analysis");
  auto* map_classify = map_cmd->add_subcommand("classify", "full classification");
  std::string classify_path;
  map_classify->add_option("file", classify_path, "map.json")->required();
  auto* map_choi = map_cmd->add_subcommand("choi", "Choi matrices and eigenvalues");
  std::string choi_path;
  map_choi->add_option("file", choi_path, "map.json")->required();

  // verify <example>
  auto* verify = app.add_subcommand("verify", "run a named verification bundle");
  std::string example;
  verify->add_option("example", example,
                     "c | c2 | c3 | covariance | stat-c2 | product | equaliser")
      ->required();
  std::string codomain;
  int degree = 8;
  int trials = 100;
  std::string channel;
  verify->add_option("--codomain", codomain, "codomain for c2 (M2, M3, M2+M3, C2)");
  verify->add_option("--degree", degree, "polynomial degree bound for c2")
      ->capture_default_str();
  verify->add_option("--trials", trials, "random trials for c2")
      ->capture_default_str();
  verify->add_option("--channel", channel, "channel for covariance (unitary, depolarizing)");

  // category laws <instance>
  auto* category = app.add_subcommand("category", "categorical law suites");
  auto* laws = category->add_subcommand("laws", "run the law suite of an instance");
  std::string instance;
  laws->add_option("instance", instance, "powerset | identity | option-neg")
      ->required();
  int max_size = 0;
  laws->add_option("--max-size", max_size,
                   "base universe bound (instance default when omitted)");

  CLI11_PARSE(app, argc, argv);
  opts.seed_set_on_cli = seed_opt->count() > 0;
  const std::string command = echo_command(argc, argv);

  try {
    if (algebra_check->parsed()) return cmd_algebra_check(algebra_path, opts, command);
    if (map_classify->parsed()) return cmd_map_classify(classify_path, opts, command);
    if (map_choi->parsed()) return cmd_map_choi(choi_path, opts, command);
    if (verify->parsed())
      return cmd_verify(example, opts, command, codomain, degree, trials, channel);
    if (laws->parsed()) return cmd_category_laws(instance, max_size, opts, command);
    std::cerr << "no subcommand given\n";
    return kExitInputError;
  } catch (const cstar::cat::SizeBoundError& e) {
    std::cerr << "size bound exceeded: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
