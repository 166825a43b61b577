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

#include "neko_cli/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "neko/analysis.hpp"
#include "neko/serialize.hpp"
#include "options.hpp"
#include "suites.hpp"

namespace neko::cli {
namespace {

std::string audit_line(const Circuit& c) {
  return "depth=" + std::to_string(c.depth()) + " size=" + std::to_string(c.size()) +
         " qubits=" + std::to_string(c.qubit_count());
}

int emit_report(const SuiteReport& r, std::ostream& out, std::ostream& err) {
  out << r.to_json().dump(2) << "\n";
  for (const auto& c : r.checks) {
    if (!c.pass) {
      err << "check failed: " << c.name << " (value " << c.value << ", bound " << c.bound << ")\n";
      return kCheckFailed;
    }
  }
  return kPass;
}

int write_circuit(const Circuit& c, const std::string& path, std::ostream& out, std::ostream& err) {
  const std::string text = serialize_circuit(c);
  if (path == "-") {
    out << text << "\n";
    err << audit_line(c) << "\n";
    return kPass;
  }
  std::ofstream file(path);
  if (!file) throw std::invalid_argument("cannot write '" + path + "'");
  file << text << "\n";
  out << audit_line(c) << "\n";
  return kPass;
}

struct RunArgs {
  std::string path;
  std::string input;
  int top = 16;
  std::string targets;
};

int cmd_run(const RunArgs& a, std::ostream& out) {
  std::ifstream file(a.path);
  if (!file) throw std::invalid_argument("cannot read circuit file '" + a.path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  const Circuit circuit = parse_circuit(buffer.str());
  const int q = circuit.qubit_count();
  require_budget(q, "run");
  if (!a.input.empty() && static_cast<int>(a.input.size()) > q) {
    throw std::invalid_argument("input has more bits than the circuit has qubits");
  }
  std::string bits = a.input;
  bits.resize(static_cast<std::size_t>(q), '0');
  const StateVector out_state = run_circuit(circuit, basis_state(q, bits));

  std::vector<std::uint64_t> order;
  for (std::uint64_t i = 0; i < out_state.dimension(); ++i) {
    if (std::norm(out_state[i]) > 1e-15) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](auto x, auto y) { return std::norm(out_state[x]) > std::norm(out_state[y]); });
  if (static_cast<int>(order.size()) > a.top) order.resize(static_cast<std::size_t>(std::max(a.top, 0)));
  nlohmann::json outcomes = nlohmann::json::array();
  for (auto i : order) {
    outcomes.push_back({{"bits", format_bits(i, q)},
                        {"amplitude", {out_state[i].real(), out_state[i].imag()}},
                        {"probability", std::norm(out_state[i])}});
  }
  nlohmann::json report = {{"construction", circuit.construction()},
                           {"params", circuit.params()},
                           {"qubits", q},
                           {"depth", circuit.depth()},
                           {"size", circuit.size()},
                           {"input", bits},
                           {"norm", out_state.norm()},
                           {"outcomes", std::move(outcomes)}};
  if (!a.targets.empty()) {
    std::vector<int> targets;
    for (int t : parse_int_list(a.targets)) {
      if (t < 0 || t >= q) throw std::invalid_argument("target wire out of range");
      targets.push_back(t);
    }
    report["nekomata_fidelity"] = nekomata_fidelity(out_state, targets);
  }
  out << report.dump(2) << "\n";
  return kPass;
}

// Runs rows on up to `jobs` threads; rows come back in input order.
std::vector<std::string> run_rows(std::size_t count, int jobs, const std::function<std::string(std::size_t)>& row) {
  std::vector<std::string> rows(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        rows[i] = row(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto threads = static_cast<std::size_t>(std::clamp(jobs, 1, 64));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::min(threads, count); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

struct GridSweepArgs {
  std::string n = "42,48,54,60,64";
  std::string weight = "half";  // "half" or an integer
  int m = 0;
  std::string mode = "auto";  // auto | dense | symmetric
};

int cmd_sweep_grid(const GridSweepArgs& a, int jobs, std::ostream& out) {
  struct Row {
    ParityRestrictedSet set;
    BoundMode mode;
  };
  std::vector<Row> tuples;
  for (int n : parse_int_list(a.n)) {
    const int w = a.weight == "half" ? n / 2 : std::stoi(a.weight);
    ParityRestrictedSet set = ParityRestrictedSet::hamming_slice(n, w);
    if (grid_gamma1(n, set.size_as_double()) > 1.0 / 16.0) {
      throw std::invalid_argument("slice:" + std::to_string(n) + ":" + std::to_string(w) +
                                  " has gamma1 > 1/16; the grid bounds do not apply");
    }
    BoundMode mode = BoundMode::kDense;
    if (a.mode == "symmetric" || (a.mode == "auto" && n % 2 == 0 && n <= 128)) {
      mode = BoundMode::kSymmetric;
    } else if (a.mode != "dense" && a.mode != "auto") {
      throw std::invalid_argument("mode must be auto, dense or symmetric");
    }
    tuples.push_back({std::move(set), mode});
  }
  const auto rows = run_rows(tuples.size(), jobs, [&](std::size_t i) -> std::string {
    try {
      return grid_sweep_row(verify_grid_bounds(tuples[i].set, a.m, tuples[i].mode));
    } catch (const BudgetExceeded&) {
      const int m = a.m > 0 ? a.m : compute_m(tuples[i].set.n(), tuples[i].set.size_as_double());
      return std::to_string(tuples[i].set.n()) + "," + tuples[i].set.to_text() + "," + std::to_string(m) +
             ",,,,,,,,,,skipped";
    }
  });
  out << grid_sweep_header() << "\n";
  for (const auto& r : rows) out << r << "\n";
  return kPass;
}

int cmd_sweep_structure(const std::string& header, std::vector<std::pair<std::string, std::function<Circuit()>>> tuples,
                        int jobs, std::ostream& out) {
  const auto rows = run_rows(tuples.size(), jobs, [&](std::size_t i) {
    const Circuit c = tuples[i].second();
    return tuples[i].first + "," + std::to_string(c.qubit_count()) + "," + std::to_string(c.depth()) + "," +
           std::to_string(c.size());
  });
  out << header << ",qubits,depth,size\n";
  for (const auto& r : rows) out << r << "\n";
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constant-depth circuit constructions: build, simulate, verify, sweep", "neko"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string output = "-";

  std::function<int()> action;

  // build
  auto* build = app.add_subcommand("build", "Build a construction and write its circuit JSON");
  build->require_subcommand(1);
  build->add_option("-o,--out", output, "Output path, '-' for stdout")->capture_default_str();

  GridOptions grid;
  auto* b_grid = build->add_subcommand("grid", "Grid nekomata preparer");
  b_grid->add_option("--n", grid.n, "Column height (taken from --set when omitted)");
  b_grid->add_option("--set", grid.set, "slice:n:w, comma-separated bitstrings, or @file (default 1^n)");
  b_grid->add_option("--m", grid.m, "Non-target columns (default compute_m)");
  b_grid->add_option("--mode", grid.mode, "U_S realization: direct or threshold")->capture_default_str();
  b_grid->callback([&] { action = [&] { return write_circuit(make_grid(grid), output, out, err); }; });

  Fig2Options fig2;
  auto* b_fig2 = build->add_subcommand("fig2-parity", "Parity from a nekomata preparer");
  b_fig2->add_option("--n", fig2.n, "Parity width")->capture_default_str();
  b_fig2->add_option("--preparer", fig2.preparer, "cat or grid")->capture_default_str();
  b_fig2->add_option("--set", fig2.set, "Grid set (grid preparer)");
  b_fig2->add_option("--m", fig2.m, "Grid columns (grid preparer, default compute_m)");
  b_fig2->callback([&] { action = [&] { return write_circuit(make_fig2(fig2), output, out, err); }; });

  CatParityOptions cat;
  auto* b_cat = build->add_subcommand("cat-parity", "Parity (or Fanout) from a cat-like circuit");
  b_cat->add_option("--n", cat.n, "Parity width")->capture_default_str();
  b_cat->add_option("--preparer", cat.preparer, "fanout or modp")->capture_default_str();
  b_cat->add_option("--p", cat.p, "Prime for the modp preparer")->capture_default_str();
  b_cat->add_flag("--fanout", cat.fanout, "Conjugate the data wires by H to get Fanout");
  b_cat->callback([&] { action = [&] { return write_circuit(make_cat_parity(cat), output, out, err); }; });

  ModpOptions modp;
  auto* b_modp = build->add_subcommand("modp-fanout", "Encoded MOD-p fanout");
  b_modp->add_option("--p", modp.p, "Prime")->capture_default_str();
  b_modp->add_option("--n", modp.n, "Fanout width")->capture_default_str();
  b_modp->add_flag("--catlike", modp.catlike, "Append the X layer that yields a plain cat state");
  b_modp->callback([&] { action = [&] { return write_circuit(make_modp(modp), output, out, err); }; });

  SubsOptions subs;
  auto* b_subs = build->add_subcommand("subs-parity", "Parity-class indicator from S-membership oracles");
  b_subs->add_option("--set", subs.set, "Parity-restricted set")->required();
  b_subs->add_option("--c", subs.c, "Size exponent: |S| >= 2^(n-c)")->capture_default_str();
  b_subs->callback([&] { action = [&] { return write_circuit(make_subs(subs), output, out, err); }; });

  ToffoliOptions toff;
  auto* b_toff = build->add_subcommand("toffoli-tree", "AND_n from small U_S oracles");
  b_toff->add_option("--n", toff.n, "Number of controls")->capture_default_str();
  b_toff->add_option("--eps", toff.epsilon, "Set density exponent in (0, 1)")->capture_default_str();
  b_toff->callback([&] { action = [&] { return write_circuit(make_toffoli(toff), output, out, err); }; });

  // run
  RunArgs run_args;
  auto* run_cmd = app.add_subcommand("run", "Simulate a circuit file on a basis input");
  run_cmd->add_option("file", run_args.path, "Circuit JSON")->required();
  run_cmd->add_option("--input", run_args.input, "Input bitstring, zero-padded (default all zeros)");
  run_cmd->add_option("--top", run_args.top, "Largest outcomes to list")->capture_default_str();
  run_cmd->add_option("--targets", run_args.targets, "Wires whose nekomata fidelity to report, e.g. 0:3");
  run_cmd->callback([&] { action = [&] { return cmd_run(run_args, out); }; });

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite; exit 0 iff every check passes");
  verify->require_subcommand(1);
  verify->add_option("--seed", seed, "Seed for randomized suites")->capture_default_str();

  GridBoundsArgs gb;
  auto* v_gb = verify->add_subcommand("grid-bounds", "Grid nekomata probability and fidelity bounds");
  v_gb->add_option("--n", gb.n, "Column height")->capture_default_str();
  v_gb->add_option("--set", gb.set, "Set (default: middle slice when symmetric, else 1^n)");
  v_gb->add_option("--m", gb.m, "Columns (default compute_m)");
  v_gb->add_option("--mode", gb.mode, "dense or symmetric")->capture_default_str();
  v_gb->callback([&] { action = [&] { return emit_report(suite_grid_bounds(gb), out, err); }; });

  Fig2Options vf;
  auto* v_fig2 = verify->add_subcommand("fig2", "Nekomata-to-parity error against twice the preparer error");
  v_fig2->add_option("--n", vf.n, "Parity width")->capture_default_str();
  v_fig2->add_option("--preparer", vf.preparer, "cat or grid")->capture_default_str();
  v_fig2->add_option("--set", vf.set, "Grid set");
  v_fig2->add_option("--m", vf.m, "Grid columns (default compute_m)");
  v_fig2->callback([&] { action = [&] { return emit_report(suite_fig2(vf), out, err); }; });

  ModpArgs vm;
  auto* v_modp = verify->add_subcommand("modp", "MOD-p fanout output state");
  v_modp->add_option("--p", vm.p, "Prime")->capture_default_str();
  v_modp->add_option("--n", vm.n, "Fanout width")->capture_default_str();
  v_modp->add_option("--trials", vm.trials, "Random (alpha, beta) pairs")->capture_default_str();
  v_modp->add_flag("--composed", vm.composed, "Also check the composed Fanout_n circuit");
  v_modp->callback([&] {
    action = [&] {
      vm.seed = seed;
      return emit_report(suite_modp(vm), out, err);
    };
  });

  ModaArgs va;
  auto* v_moda = verify->add_subcommand("moda", "Qudit MOD oracle identity");
  v_moda->add_option("--p", va.p, "Prime")->capture_default_str();
  v_moda->add_option("--n", va.n, "Inputs")->capture_default_str();
  v_moda->callback([&] { action = [&] { return emit_report(suite_moda(va), out, err); }; });

  SubsArgs vs;
  auto* v_subs = verify->add_subcommand("subs", "Parity-class covering by translates of S");
  v_subs->add_option("--n", vs.n, "Width")->capture_default_str();
  v_subs->add_option("--trials", vs.trials, "Random sets")->capture_default_str();
  v_subs->add_option("--c", vs.c, "Largest size exponent")->capture_default_str();
  v_subs->add_flag("--circuits", vs.circuits, "Also check the built circuits (n <= 8)");
  v_subs->callback([&] {
    action = [&] {
      vs.seed = seed;
      return emit_report(suite_subs(vs), out, err);
    };
  });

  RestrictArgs vr;
  auto* v_restrict = verify->add_subcommand("restrict", "Greedy index fixing uniqueness and length");
  v_restrict->add_option("--n", vr.n, "Width")->capture_default_str();
  v_restrict->add_option("--trials", vr.trials, "Random sets")->capture_default_str();
  v_restrict->add_flag("--circuits", vr.circuits, "Also check AND trees for widths 2..min(n, 8)");
  v_restrict->add_option("--eps", vr.epsilon, "AND tree density exponent")->capture_default_str();
  v_restrict->callback([&] {
    action = [&] {
      vr.seed = seed;
      return emit_report(suite_restrict(vr), out, err);
    };
  });

  EquivalenceArgs ve;
  auto* v_eq = verify->add_subcommand("equivalences", "Gate identities on small registers");
  v_eq->add_option("--n", ve.n, "Width (2..6)")->capture_default_str();
  v_eq->callback([&] { action = [&] { return emit_report(suite_equivalences(ve), out, err); }; });

  // sweep
  auto* sweep = app.add_subcommand("sweep", "CSV sweep over parameter ranges");
  sweep->require_subcommand(1);
  sweep->add_option("--jobs", jobs, "Worker threads")->capture_default_str();

  GridSweepArgs sg;
  auto* s_grid = sweep->add_subcommand("grid", "Grid bounds over Hamming slices");
  s_grid->add_option("--n", sg.n, "Widths: a,b,c or a:b[:step]")->capture_default_str();
  s_grid->add_option("--weight", sg.weight, "Slice weight, or 'half'")->capture_default_str();
  s_grid->add_option("--m", sg.m, "Columns (default compute_m)");
  s_grid->add_option("--mode", sg.mode, "auto, dense or symmetric")->capture_default_str();
  s_grid->callback([&] { action = [&] { return cmd_sweep_grid(sg, jobs, out); }; });

  std::string sp = "2,3";
  std::string sn = "1:4";
  auto* s_modp = sweep->add_subcommand("modp-fanout", "Structure of the MOD-p fanout");
  s_modp->add_option("--p", sp, "Primes")->capture_default_str();
  s_modp->add_option("--n", sn, "Widths")->capture_default_str();
  s_modp->callback([&] {
    action = [&] {
      std::vector<std::pair<std::string, std::function<Circuit()>>> tuples;
      for (int p : parse_int_list(sp)) {
        for (int n : parse_int_list(sn)) {
          tuples.emplace_back(std::to_string(p) + "," + std::to_string(n), [p, n] { return build_modp_fanout(p, n); });
        }
      }
      return cmd_sweep_structure("p,n", std::move(tuples), jobs, out);
    };
  });

  std::string tn = "2:16";
  double teps = 0.5;
  auto* s_toff = sweep->add_subcommand("toffoli-tree", "Structure of the AND tree");
  s_toff->add_option("--n", tn, "Widths")->capture_default_str();
  s_toff->add_option("--eps", teps, "Density exponent")->capture_default_str();
  s_toff->callback([&] {
    action = [&] {
      std::vector<std::pair<std::string, std::function<Circuit()>>> tuples;
      for (int n : parse_int_list(tn)) {
        std::ostringstream key;
        key << n << "," << teps;
        tuples.emplace_back(key.str(), [n, e = teps] { return make_toffoli({n, e}); });
      }
      return cmd_sweep_structure("n,epsilon", std::move(tuples), jobs, out);
    };
  });

  // Parent options (--out, --seed, --jobs) may follow the construction name.
  for (auto* parent : {build, verify, sweep}) {
    for (auto* sub : parent->get_subcommands({})) sub->fallthrough();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsageError;
  }

  try {
    return action ? action() : kUsageError;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const std::invalid_argument& e) {
    err << "invalid parameters: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "invalid parameters: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace neko::cli
