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

namespace cstar {

/// Absolute/relative tolerance pair. A residual r at scale s is accepted
/// when r <= abs + rel * s.
struct Tolerance {
  double abs = 1e-9;
  double rel = 1e-9;

  constexpr double bound(double scale = 0.0) const { return abs + rel * scale; }
  constexpr bool close(double residual, double scale = 0.0) const {
    return residual <= bound(scale);
  }
};

}  // namespace cstar
