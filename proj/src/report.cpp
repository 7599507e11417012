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

#include "cstar/report.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "cstar/json_io.hpp"

namespace cstar {

RunReport::RunReport(std::string command, std::uint64_t seed, Tolerance tol)
    : command_(std::move(command)), seed_(seed), tol_(tol) {}

void RunReport::run_check(const std::string& name, const std::function<Verdict()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v = fn();
  const auto stop = std::chrono::steady_clock::now();
  add_check(name, v,
            std::chrono::duration<double, std::milli>(stop - start).count());
}

void RunReport::add_check(const std::string& name, const Verdict& verdict,
                          double wall_ms) {
  checks_.push_back({name, verdict});
  wall_ms_.push_back(wall_ms);
}

void RunReport::set_payload(const std::string& key, nlohmann::json value) {
  payload_[key] = std::move(value);
}

bool RunReport::all_passed() const {
  for (const NamedVerdict& nv : checks_)
    if (!nv.verdict.passed) return false;
  return true;
}

nlohmann::json RunReport::to_json(bool include_timing) const {
  nlohmann::json j;
  j["command"] = command_;
  j["seed"] = seed_;
  j["tolerance"] = {{"abs", tol_.abs}, {"rel", tol_.rel}};
  nlohmann::json checks = nlohmann::json::array();
  for (const NamedVerdict& nv : checks_) {
    nlohmann::json c = verdict_to_json(nv.verdict);
    c["name"] = nv.name;
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  if (!payload_.empty()) j["payload"] = payload_;
  j["all_passed"] = all_passed();
  if (include_timing) {
    nlohmann::json per_check = nlohmann::json::object();
    for (size_t i = 0; i < checks_.size(); ++i)
      per_check[checks_[i].name] = wall_ms_[i];
    const auto now = std::chrono::system_clock::now();
    j["timing"] = {{"timestamp_ms", std::chrono::duration_cast<std::chrono::milliseconds>(
                                        now.time_since_epoch())
                                        .count()},
                   {"wall_ms", std::move(per_check)}};
  }
  return j;
}

std::string RunReport::pretty() const {
  std::ostringstream out;
  out << "command : " << command_ << "\n";
  out << "seed    : " << seed_ << "\n";
  out << "tol     : abs " << tol_.abs << ", rel " << tol_.rel << "\n";
  size_t width = 4;
  for (const NamedVerdict& nv : checks_) width = std::max(width, nv.name.size());
  for (size_t i = 0; i < checks_.size(); ++i) {
    const NamedVerdict& nv = checks_[i];
    out << (nv.verdict.passed ? "[pass] " : "[FAIL] ") << std::left
        << std::setw(static_cast<int>(width) + 2) << nv.name << " margin "
        << std::setprecision(6) << std::scientific << nv.verdict.margin << "  ("
        << std::fixed << std::setprecision(1) << wall_ms_[i] << " ms)";
    if (!nv.verdict.note.empty()) out << "  " << nv.verdict.note;
    out << "\n";
    if (!nv.verdict.passed && !nv.verdict.witness.is_null())
      out << "        witness: " << nv.verdict.witness.dump() << "\n";
  }
  out << (all_passed() ? "ALL CHECKS PASSED" : "SOME CHECKS FAILED") << "\n";
  return out.str();
}

}  // namespace cstar
