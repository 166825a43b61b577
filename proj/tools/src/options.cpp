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

#include "options.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace neko::cli {
namespace {

int parse_int(std::string_view text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

ParityRestrictedSet load_set(const std::string& text, int n) {
  if (text.empty()) {
    if (n < 1 || n > 64) throw std::invalid_argument("default all-ones set needs 1 <= n <= 64");
    return ParityRestrictedSet::singleton(n, low_mask(n));
  }
  ParityRestrictedSet set = [&] {
    if (text.front() != '@') return parse_set(text);
    std::ifstream in(text.substr(1));
    if (!in) throw std::invalid_argument("cannot read set file '" + text.substr(1) + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_set(buffer.str());
  }();
  if (n > 0 && set.n() != n) {
    throw std::invalid_argument("set width " + std::to_string(set.n()) + " does not match n = " + std::to_string(n));
  }
  return set;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() > 3) throw std::invalid_argument("range must be a:b or a:b:step");
    const int lo = parse_int(parts[0]);
    const int hi = parse_int(parts[1]);
    const int step = parts.size() == 3 ? parse_int(parts[2]) : 1;
    if (step < 1) throw std::invalid_argument("range step must be positive");
    for (long v = lo; v <= hi; v += step) values.push_back(static_cast<int>(v));
  } else if (!text.empty()) {
    for (auto part : split(text, ',')) values.push_back(parse_int(part));
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

UsMode parse_us_mode(const std::string& text) {
  if (text == "direct") return UsMode::kDirect;
  if (text == "threshold") return UsMode::kThresholdCompiled;
  throw std::invalid_argument("U_S mode must be direct or threshold, got '" + text + "'");
}

Circuit make_grid(const GridOptions& o) {
  ParityRestrictedSet set = load_set(o.set, o.n);
  const int m = o.m > 0 ? o.m : compute_m(set.n(), set.size_as_double());
  const int n = set.n();
  GridParams params{n, std::move(set), m};
  params.validate();
  return build_grid_nekomata(params, parse_us_mode(o.mode));
}

std::pair<Circuit, std::vector<int>> make_fig2_preparer(const Fig2Options& o) {
  if (o.preparer == "cat") {
    if (o.n < 1) throw std::invalid_argument("n must be positive");
    return {build_cat_state(o.n), wire_range(0, o.n)};
  }
  if (o.preparer == "grid") {
    Circuit grid = make_grid({o.n, o.set, o.m, "direct"});
    const int n = grid.params().at("n").get<int>();
    return {std::move(grid), wire_range(0, n)};
  }
  throw std::invalid_argument("preparer must be cat or grid, got '" + o.preparer + "'");
}

Circuit make_fig2(const Fig2Options& o) {
  const auto [preparer, targets] = make_fig2_preparer(o);
  return build_nekomata_to_parity(preparer, targets);
}

Circuit make_cat_parity(const CatParityOptions& o) {
  if (o.n < 1) throw std::invalid_argument("n must be positive");
  Circuit parity;
  if (o.preparer == "fanout") {
    parity = build_cat_to_parity(build_fanout_catlike(o.n));
  } else if (o.preparer == "modp") {
    // Smallest block count whose cat covers n wires.
    const int blocks = std::max(1, (o.n + 1) / 2 - 1);
    const ModpCatlike cat = build_modp_catlike(o.p, blocks);
    parity = build_cat_to_parity(cat.circuit, {cat.cat_wires.begin(), cat.cat_wires.begin() + o.n});
  } else {
    throw std::invalid_argument("preparer must be fanout or modp, got '" + o.preparer + "'");
  }
  if (!o.fanout) return parity;
  return conjugate_by_hadamards(parity, wire_range(0, o.n + 1));
}

Circuit make_modp(const ModpOptions& o) {
  if (o.catlike) return build_modp_catlike(o.p, o.n).circuit;
  return build_modp_fanout(o.p, o.n);
}

Circuit make_subs(const SubsOptions& o) {
  if (o.set.empty()) throw std::invalid_argument("subs-parity needs --set");
  return build_subs_parity(load_set(o.set, 0), o.c);
}

Circuit make_toffoli(const ToffoliOptions& o) {
  const double eps = o.epsilon;
  return build_toffoli_from_small_us([eps](int k) { return block_code_set(k, eps); }, eps, o.n);
}

bool SuiteReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks) {
    list.push_back({{"check", c.name}, {"value", c.value}, {"bound", c.bound}, {"pass", c.pass}});
  }
  return {{"suite", suite}, {"params", params}, {"checks", std::move(list)}, {"details", details}, {"pass", pass()}};
}

}  // namespace neko::cli
