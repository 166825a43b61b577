// Copyright 2026 The nekomata Authors
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
#include <string>

#include "options.hpp"

namespace neko::cli {

struct GridBoundsArgs {
  int n = 4;
  std::string set;  // empty: middle slice in symmetric mode, all-ones otherwise
  int m = 0;
  std::string mode = "dense";  // dense | symmetric
};
SuiteReport suite_grid_bounds(const GridBoundsArgs& a);

/// Basis-input error of the nekomata-to-parity circuit against Parity_n,
/// bounded by twice the preparer's nekomata error.
SuiteReport suite_fig2(const Fig2Options& a);

struct ModpArgs {
  int p = 2;
  int n = 2;
  int trials = 4;
  std::uint64_t seed = 0;
  bool composed = false;  // also check the composed Fanout_n circuit
};
SuiteReport suite_modp(const ModpArgs& a);

struct ModaArgs {
  int p = 3;
  int n = 2;
};
SuiteReport suite_moda(const ModaArgs& a);

struct SubsArgs {
  int n = 8;
  int trials = 200;
  int c = 3;  // largest c drawn
  std::uint64_t seed = 0;
  bool circuits = false;  // also build and check circuits (n <= 8)
};
SuiteReport suite_subs(const SubsArgs& a);

struct RestrictArgs {
  int n = 10;
  int trials = 200;
  std::uint64_t seed = 0;
  bool circuits = false;  // also check the AND trees for widths 2..min(n, 8)
  double epsilon = 0.5;
};
SuiteReport suite_restrict(const RestrictArgs& a);

struct EquivalenceArgs {
  int n = 4;
};
SuiteReport suite_equivalences(const EquivalenceArgs& a);

}  // namespace neko::cli
