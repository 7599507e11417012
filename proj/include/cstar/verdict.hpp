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
#include <utility>

#include <nlohmann/json.hpp>

namespace cstar {

/// Outcome of a checker: pass/fail, a signed numeric certificate, and an
/// optional counterexample payload.
///
/// Margin conventions:
///  - positivity-style checks report the minimal eigenvalue (pass while the
///    margin stays above the negative tolerance slack),
///  - equality-style checks report the maximal residual (pass while the
///    margin stays below the tolerance).
/// The note records qualifications such as "no counterexample found
/// (sampled)" for checks that are not exhaustive.
struct Verdict {
  bool passed = false;
  double margin = 0.0;
  nlohmann::json witness;  // null unless there is a concrete counterexample
  std::string note;

  static Verdict pass(double margin, std::string note = "") {
    return Verdict{true, margin, nullptr, std::move(note)};
  }
  static Verdict fail(double margin, nlohmann::json witness = nullptr,
                      std::string note = "") {
    return Verdict{false, margin, std::move(witness), std::move(note)};
  }

  explicit operator bool() const { return passed; }
};

/// A verdict labelled by the check that produced it; the unit in which
/// law suites and CLI reports aggregate results.
struct NamedVerdict {
  std::string name;
  Verdict verdict;
};

}  // namespace cstar
