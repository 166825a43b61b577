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

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "neko/circuit.hpp"
#include "neko/constructions.hpp"
#include "neko/fsets.hpp"

namespace neko::cli {

/// Set argument: "slice:n:w", comma-separated bitstrings, or "@path" naming a
/// set file. An empty text selects the all-ones singleton of width n.
ParityRestrictedSet load_set(const std::string& text, int n);

/// Integer list: "a,b,c", "a:b" (inclusive), or "a:b:step". Returned sorted
/// and without duplicates; "a:b" with a > b is empty.
std::vector<int> parse_int_list(const std::string& text);

UsMode parse_us_mode(const std::string& text);

struct GridOptions {
  int n = 0;
  std::string set;
  int m = 0;  // <= 0 selects compute_m
  std::string mode = "direct";
};

struct Fig2Options {
  int n = 3;
  std::string preparer = "cat";  // cat | grid
  std::string set;
  int m = 0;
};

struct CatParityOptions {
  int n = 3;
  std::string preparer = "fanout";  // fanout | modp
  int p = 2;
  bool fanout = false;  // Hadamard-conjugate the data wires
};

struct ModpOptions {
  int p = 2;
  int n = 2;
  bool catlike = false;
};

struct SubsOptions {
  std::string set;
  int c = 3;
};

struct ToffoliOptions {
  int n = 4;
  double epsilon = 0.5;
};

Circuit make_grid(const GridOptions& o);
/// Preparer circuit and its target wires for the nekomata-to-parity circuit.
std::pair<Circuit, std::vector<int>> make_fig2_preparer(const Fig2Options& o);
Circuit make_fig2(const Fig2Options& o);
Circuit make_cat_parity(const CatParityOptions& o);
Circuit make_modp(const ModpOptions& o);
Circuit make_subs(const SubsOptions& o);
Circuit make_toffoli(const ToffoliOptions& o);

/// One named check of a verification suite.
struct Check {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  nlohmann::json params = nlohmann::json::object();
  std::vector<Check> checks;
  nlohmann::json details = nlohmann::json::object();

  void add(std::string name, double value, double bound, bool pass) {
    checks.push_back({std::move(name), value, bound, pass});
  }
  bool pass() const;
  nlohmann::json to_json() const;
};

}  // namespace neko::cli
