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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cstar/gelfand.hpp"
#include "cstar/json_io.hpp"
#include "cstar/polynomial.hpp"
#include "cstar/random.hpp"
#include "cstar/zoo.hpp"

using namespace cstar;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code = -1;
  nlohmann::json output;
  std::string raw;
};

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "cstar-cli-tests";
  fs::create_directories(dir);
  return dir;
}

CliResult run_cli(const std::string& args) {
  const fs::path out_path = scratch_dir() / "stdout.json";
  const std::string cmd = std::string(WORKBENCH_CLI_PATH) + " " + args + " > " +
                          out_path.string() + " 2> " +
                          (scratch_dir() / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  CliResult result;
  result.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  result.raw = buffer.str();
  if (!result.raw.empty() && result.raw.front() == '{')
    result.output = nlohmann::json::parse(result.raw);
  return result;
}

fs::path write_fixture(const std::string& name, const nlohmann::json& j) {
  const fs::path path = scratch_dir() / name;
  std::ofstream out(path);
  out << j.dump(2);
  return path;
}

}  // namespace

TEST_CASE("algebra and element JSON round trips") {
  const Algebra a({2, 1, 3});
  CHECK(algebra_from_json(algebra_to_json(a)) == a);

  Rng rng(83);
  for (int t = 0; t < 20; ++t) {
    const Element e = random_element(a, rng);
    const Element back = element_from_json(element_to_json(e));
    CHECK(back.parent() == a);
    CHECK(distance(back, e) == 0.0);
  }

  CHECK_THROWS_AS(algebra_from_json({{"blocks", {0}}}), std::invalid_argument);
  CHECK_THROWS_AS(algebra_from_json({{"wrong", 1}}), std::invalid_argument);
  CHECK_THROWS_AS(element_from_json({{"algebra", {{"blocks", {2}}}},
                                     {"blocks", {{1.0, 2.0}}}}),
                  std::invalid_argument);
}

TEST_CASE("map JSON round trips preserve the action") {
  Rng rng(89);
  for (const ZooEntry& entry : full_zoo()) {
    const LinearMap back = map_from_json(map_to_json(entry.map));
    CHECK(map_distance(back, entry.map) == 0.0);
  }
  // Basis images may omit the algebra; a contradictory one is rejected.
  nlohmann::json j = map_to_json(identity_map(Algebra::scalars(1)));
  j["basis_images"][0]["algebra"] = {{"blocks", {2}}};
  CHECK_THROWS_AS(map_from_json(j), std::invalid_argument);
}

TEST_CASE("polynomial JSON: coefficients lowest degree first") {
  const Polynomial p(std::vector<Complex>{Complex(0.5, -1.0), Complex(0, 0), Complex(2, 3)});
  const nlohmann::json j = polynomial_to_json(p);
  REQUIRE(j.size() == 3);
  CHECK(j[0][0] == 0.5);
  CHECK(j[0][1] == -1.0);
  CHECK(polynomial_from_json(j) == p);
}

TEST_CASE("verdict serialization") {
  const Verdict v = Verdict::fail(-0.25, {{"block", 1}}, "spectral witness");
  const nlohmann::json j = verdict_to_json(v);
  CHECK(j["passed"] == false);
  CHECK(j["margin"] == -0.25);
  CHECK(j["witness"]["block"] == 1);
  CHECK(j["note"] == "spectral witness");
}

TEST_CASE("cli: map classify labels and exit codes") {
  const fs::path transpose =
      write_fixture("transpose-on-M2.json",
                    map_to_json(transpose_map(Algebra::full_matrix(2))));
  CliResult r = run_cli("map classify " + transpose.string());
  // Multiplicativity and complete positivity fail for the transpose, so the
  // report is not all-pass.
  CHECK(r.exit_code == 1);
  CHECK(r.output["payload"]["label"] == "PU");
  // Choi eigenvalues {-1, 1, 1, 1} appear in the payload.
  CHECK(r.output["payload"]["choi_eigenvalues"][0].get<double>() ==
        doctest::Approx(-1.0));

  Rng rng(97);
  const fs::path conj =
      write_fixture("unitary-conjugation.json",
                    map_to_json(unitary_conjugation(Algebra::full_matrix(2),
                                                    {random_unitary(2, rng)})));
  r = run_cli("map classify " + conj.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output["payload"]["label"] == "MIU");

  const fs::path depol = write_fixture("depolarizing.json",
                                       map_to_json(depolarizing_channel(2, 0.5)));
  r = run_cli("map classify " + depol.string());
  CHECK(r.exit_code == 1);  // multiplicativity fails
  CHECK(r.output["payload"]["label"] == "CPU");
  for (const auto& check : r.output["checks"])
    if (check["name"] == "multiplicative") CHECK_FALSE(check["witness"].is_null());
}

TEST_CASE("cli: map choi") {
  const fs::path identity =
      write_fixture("identity-M2.json", map_to_json(identity_map(Algebra::full_matrix(2))));
  const CliResult r = run_cli("map choi " + identity.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output["payload"]["eigenvalues_per_block"][0][3].get<double>() ==
        doctest::Approx(2.0));
}

TEST_CASE("cli: algebra check") {
  const fs::path algebra = write_fixture("m2c.json", algebra_to_json(Algebra({2, 1})));
  CliResult r = run_cli("algebra check " + algebra.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output["payload"]["dim"] == 5);

  Rng rng(101);
  const fs::path element = write_fixture(
      "element.json", element_to_json(random_element(Algebra({2, 1}), rng)));
  r = run_cli("algebra check " + element.string());
  CHECK(r.exit_code == 0);
}

TEST_CASE("cli: exit code 2 on malformed input") {
  const fs::path garbage = scratch_dir() / "garbage.json";
  std::ofstream(garbage) << "{ not json";
  CHECK(run_cli("map classify " + garbage.string()).exit_code == 2);
  CHECK(run_cli("algebra check " + garbage.string()).exit_code == 2);

  // Shape mismatch: wrong number of basis images.
  nlohmann::json bad = map_to_json(identity_map(Algebra::scalars(2)));
  bad["basis_images"].erase(1);
  const fs::path bad_path = write_fixture("bad-map.json", bad);
  CHECK(run_cli("map classify " + bad_path.string()).exit_code == 2);

  CHECK(run_cli("verify no-such-example").exit_code == 2);
  CHECK(run_cli("category laws nonsense").exit_code == 2);
  CHECK(run_cli("map classify /nonexistent/path.json").exit_code == 2);
  // Size bound exceeded: powerset laws at size 3 need the triple powerset.
  CHECK(run_cli("category laws powerset --max-size 3").exit_code == 2);
}

TEST_CASE("cli: verify bundles pass") {
  CHECK(run_cli("verify c").exit_code == 0);
  CHECK(run_cli("verify c3").exit_code == 0);
  CHECK(run_cli("verify stat-c2").exit_code == 0);
  CHECK(run_cli("verify product").exit_code == 0);
  CHECK(run_cli("verify equaliser").exit_code == 0);
  CHECK(run_cli("verify c2 --codomain M3 --degree 6 --trials 10").exit_code == 0);
  CHECK(run_cli("verify covariance --channel unitary").exit_code == 0);
  // Expected-fail detection counts as a pass.
  const CliResult r = run_cli("verify covariance --channel depolarizing");
  CHECK(r.exit_code == 0);
}

TEST_CASE("cli: category laws") {
  CHECK(run_cli("category laws powerset --max-size 2").exit_code == 0);
  CHECK(run_cli("category laws identity").exit_code == 0);
  // The negative instance reports its failing checks.
  const CliResult r = run_cli("category laws option-neg --max-size 2");
  CHECK(r.exit_code == 1);
  bool biconditional_passed = false;
  for (const auto& check : r.output["checks"])
    if (check["name"] == "Kleislian biconditional") biconditional_passed = check["passed"];
  CHECK(biconditional_passed);
}

TEST_CASE("cli: reports are deterministic modulo timing") {
  const CliResult a = run_cli("verify c2 --trials 5 --seed 7");
  const CliResult b = run_cli("verify c2 --trials 5 --seed 7");
  REQUIRE(a.exit_code == 0);
  nlohmann::json ja = a.output;
  nlohmann::json jb = b.output;
  ja.erase("timing");
  jb.erase("timing");
  CHECK(ja.dump() == jb.dump());

  // A different seed changes the sampled content.
  CliResult c = run_cli("verify covariance --channel depolarizing --seed 8");
  CliResult d = run_cli("verify covariance --channel depolarizing --seed 9");
  CHECK(c.exit_code == 0);
  CHECK(d.exit_code == 0);
}

TEST_CASE("cli: WORKBENCH_SEED fallback") {
  const CliResult r = run_cli("--pretty verify c3");
  CHECK(r.exit_code == 0);
  CHECK(r.raw.find("ALL CHECKS PASSED") != std::string::npos);

  const fs::path out = scratch_dir() / "seeded.json";
  const std::string cmd = std::string("WORKBENCH_SEED=123 ") + WORKBENCH_CLI_PATH +
                          " verify c3 > " + out.string() + " 2>/dev/null";
  REQUIRE(std::system(cmd.c_str()) == 0);
  std::ifstream in(out);
  nlohmann::json j;
  in >> j;
  CHECK(j["seed"] == 123);
}
