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
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cstar/tolerance.hpp"
#include "cstar/verdict.hpp"

namespace cstar {

/// Machine-readable outcome of one CLI invocation: the command echo, seed
/// and tolerance in effect, the named verdicts with any extra payload, and
/// per-check wall times. Everything except the "timing" object is
/// deterministic for a fixed command, seed and input.
class RunReport {
 public:
  RunReport(std::string command, std::uint64_t seed, Tolerance tol);

  /// Runs fn, records its verdict under the given name and tracks the wall
  /// time of the call.
  void run_check(const std::string& name, const std::function<Verdict()>& fn);
  void add_check(const std::string& name, const Verdict& verdict, double wall_ms = 0.0);

  /// Free-form extra payload rendered alongside the checks (classification
  /// labels, eigenvalue lists, ...).
  void set_payload(const std::string& key, nlohmann::json value);

  bool all_passed() const;
  /// 0 when every verdict passed, 1 otherwise. Input errors exit 2 before a
  /// report exists.
  int exit_code() const { return all_passed() ? 0 : 1; }

  /// The report as JSON. The nondeterministic parts (timestamp and wall
  /// times) live under the single top-level key "timing" so that reports
  /// can be compared byte for byte after dropping it.
  nlohmann::json to_json(bool include_timing = true) const;
  /// Human-readable table.
  std::string pretty() const;

 private:
  std::string command_;
  std::uint64_t seed_;
  Tolerance tol_;
  std::vector<NamedVerdict> checks_;
  std::vector<double> wall_ms_;
  nlohmann::json payload_ = nlohmann::json::object();
};

}  // namespace cstar
