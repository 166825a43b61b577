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

#include "suites.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "neko/analysis.hpp"
#include "neko/dense.hpp"
#include "neko/gates.hpp"
#include "neko/random.hpp"

namespace neko::cli {
namespace {

constexpr double kExactTolerance = 1e-9;
constexpr double kOracleTolerance = 1e-12;

// Stream ids keep the randomized suites independent under one seed.
constexpr std::uint64_t kStreamModp = 1;
constexpr std::uint64_t kStreamSubs = 2;
constexpr std::uint64_t kStreamRestrict = 3;

int ceil_log2(std::uint64_t v) { return v <= 1 ? 0 : static_cast<int>(std::bit_width(v - 1)); }

BitVector input_bits(int qubits, Word x, int width) {
  BitVector bits(static_cast<std::size_t>(qubits), 0);
  for (int i = 0; i < width; ++i) bits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(bit_at(x, width, i));
  return bits;
}

// Mismatches of a monomial circuit against out_bit(x) on wire `out`, with every
// wire past `out` required to return to 0.
int count_indicator_mismatches(const Circuit& c, int width, int out, const std::function<bool(Word)>& expected) {
  int bad = 0;
  for (Word x = 0; x < (Word{1} << width); ++x) {
    const BasisImage img = basis_image(c, input_bits(c.qubit_count(), x, width));
    bool ok = img.bits[static_cast<std::size_t>(out)] == (expected(x) ? 1 : 0) && std::abs(img.phase - 1.0) < 1e-12;
    for (int i = 0; i < width; ++i) ok = ok && img.bits[static_cast<std::size_t>(i)] == bit_at(x, width, i);
    for (int i = out + 1; i < c.qubit_count(); ++i) ok = ok && img.bits[static_cast<std::size_t>(i)] == 0;
    if (!ok) ++bad;
  }
  return bad;
}

Complex random_amplitude(CounterRng& rng) { return {rng.normal(), rng.normal()}; }

DenseOperator identity(int qubits) {
  const auto dim = Eigen::Index{1} << qubits;
  return DenseOperator::Identity(dim, dim);
}

}  // namespace

SuiteReport suite_grid_bounds(const GridBoundsArgs& a) {
  BoundMode mode;
  if (a.mode == "dense") {
    mode = BoundMode::kDense;
  } else if (a.mode == "symmetric") {
    mode = BoundMode::kSymmetric;
  } else {
    throw std::invalid_argument("mode must be dense or symmetric, got '" + a.mode + "'");
  }
  const ParityRestrictedSet set = (a.set.empty() && mode == BoundMode::kSymmetric)
                                      ? ParityRestrictedSet::hamming_slice(a.n, a.n / 2)
                                      : load_set(a.set, a.n);
  const NekomataReport r = verify_grid_bounds(set, a.m, mode);
  SuiteReport s;
  s.suite = "grid-bounds";
  s.params = {{"n", set.n()}, {"set", set.to_text()}, {"m", r.grid.m}, {"mode", a.mode}};
  for (const auto& c : r.checks) s.add(c.name, c.value, c.bound, c.pass);
  s.details = to_json(r);
  // The statement-level error scale next to the explicit bound.
  s.details["statement_scale"] = r.grid.gamma1;
  s.details["explicit_epsilon_bound"] = 1.0 - r.bound_fidelity;
  return s;
}

SuiteReport suite_fig2(const Fig2Options& a) {
  const auto [preparer, targets] = make_fig2_preparer(a);
  const int n = static_cast<int>(targets.size());
  const Circuit circuit = build_nekomata_to_parity(preparer, targets);
  require_budget(circuit.qubit_count(), "nekomata-to-parity verification");

  const StateVector prepared = run_circuit(preparer, StateVector(preparer.qubit_count()));
  const double epsilon = 1.0 - nekomata_fidelity(prepared, targets);
  const ErrorProfile e = basis_error_profile(circuit, ideal_parity(n), preparer.qubit_count());

  SuiteReport s;
  s.suite = "fig2";
  s.params = {{"n", n}, {"preparer", a.preparer}, {"preparer_params", preparer.params()}};
  s.add("max basis L2 error <= 2 epsilon", e.max_l2, 2.0 * epsilon + kExactTolerance,
        e.max_l2 <= 2.0 * epsilon + kExactTolerance);
  s.add("min basis fidelity >= 1 - 2 epsilon", e.min_fidelity, 1.0 - 2.0 * epsilon - kExactTolerance,
        e.min_fidelity >= 1.0 - 2.0 * epsilon - kExactTolerance);
  s.details = {{"epsilon", epsilon},
               {"qubits", circuit.qubit_count()},
               {"depth", circuit.depth()},
               {"size", circuit.size()},
               {"l2", e.l2},
               {"fidelity", e.fidelity}};
  return s;
}

SuiteReport suite_modp(const ModpArgs& a) {
  const Circuit circuit = build_modp_fanout(a.p, a.n);
  const ModpLayout layout{a.p, a.n};
  const int q = circuit.qubit_count();
  require_budget(q, "mod-p fanout verification");

  const StateVector probe(q);
  Word zeros = 0;
  Word ones = 0;
  for (int j = 0; j <= a.n; ++j) {
    zeros |= probe.mask_of(layout.block_wire(j, 0));
    ones |= probe.mask_of(layout.block_wire(j, 1));
  }

  SuiteReport s;
  s.suite = "modp";
  s.params = {{"p", a.p}, {"n", a.n}, {"trials", a.trials}, {"seed", a.seed}, {"composed", a.composed}};
  CounterRng rng(a.seed, kStreamModp);
  double worst = 0.0;
  nlohmann::json trials = nlohmann::json::array();
  for (int t = 0; t < a.trials; ++t) {
    Complex alpha = random_amplitude(rng);
    Complex beta = random_amplitude(rng);
    const double norm = std::sqrt(std::norm(alpha) + std::norm(beta));
    alpha /= norm;
    beta /= norm;
    StateVector in(q);
    in[0] = alpha;
    in[in.mask_of(0)] = beta;
    StateVector expected(q);
    expected[0] = 0.0;
    expected[zeros] = alpha;
    expected[ones] = beta;
    const double err = l2_distance(run_circuit(circuit, in), expected);
    worst = std::max(worst, err);
    trials.push_back({{"alpha", {alpha.real(), alpha.imag()}}, {"beta", {beta.real(), beta.imag()}}, {"l2", err}});
  }
  s.add("max output L2 error", worst, kExactTolerance, worst <= kExactTolerance);
  s.details = {{"qubits", q}, {"depth", circuit.depth()}, {"size", circuit.size()}, {"trials", std::move(trials)}};

  if (a.composed) {
    const ModpCatlike cat = build_modp_catlike(a.p, a.n);
    const std::vector<int> wires(cat.cat_wires.begin(), cat.cat_wires.begin() + a.n);
    const Circuit fanout =
        conjugate_by_hadamards(build_cat_to_parity(cat.circuit, wires), wire_range(0, a.n + 1));
    const IsometryCheck chk = isometry_check(fanout, ideal_fanout(a.n), fanout.qubit_count() - a.n - 1);
    s.add("composed Fanout_n operator distance", chk.bound, kExactTolerance, chk.bound <= kExactTolerance);
    s.details["composed"] = {{"qubits", fanout.qubit_count()},
                             {"depth", fanout.depth()},
                             {"size", fanout.size()},
                             {"block_distance", chk.block_distance},
                             {"leakage", chk.leakage},
                             {"max_l2", chk.max_l2}};
  }
  return s;
}

SuiteReport suite_moda(const ModaArgs& a) {
  const auto [lhs, rhs] = qudit_mod_oracle(a.p, a.n);
  const double diff = (lhs - rhs).cwiseAbs().maxCoeff();
  SuiteReport s;
  s.suite = "moda";
  s.params = {{"p", a.p}, {"n", a.n}};
  s.add("max entry difference", diff, kOracleTolerance, diff <= kOracleTolerance);
  s.details = {{"dimension", lhs.rows()}};
  return s;
}

SuiteReport suite_subs(const SubsArgs& a) {
  if (a.n < 2 || a.n > 10) throw std::invalid_argument("subs suite enumerates inputs and needs 2 <= n <= 10");
  if (a.c < 1 || a.c > std::min(6, a.n - 1)) throw std::invalid_argument("subs suite needs 1 <= c <= min(6, n - 1)");
  if (a.circuits && a.n > 8) throw std::invalid_argument("circuit checks need n <= 8");
  CounterRng rng(a.seed, kStreamSubs);
  int covering_bad = 0;
  int circuit_bad = 0;
  int worst_excess = -a.c;
  int max_d = 0;
  int above = 0;
  for (int t = 0; t < a.trials; ++t) {
    const int c = static_cast<int>(rng.between(1, a.c));
    const auto size = static_cast<std::uint64_t>(rng.between(std::int64_t{1} << (a.n - c), std::int64_t{1} << (a.n - 1)));
    const int parity = static_cast<int>(rng.below(2));
    const ParityRestrictedSet set = sample_parity_restricted_set(a.n, size, parity, rng);
    const F2Basis basis = subs_complement_basis(set, c);
    const int d = static_cast<int>(basis.vectors.size());
    max_d = std::max(max_d, d);
    worst_excess = std::max(worst_excess, d - (c - 1));
    if (d > c - 1) ++above;
    const auto span = span_enumerate(basis);
    for (Word x = 0; x < (Word{1} << a.n); ++x) {
      const bool covered = std::any_of(span.begin(), span.end(), [&](Word y) { return set.contains(x ^ y); });
      if (covered != (popcount(x) % 2 == set.parity())) ++covering_bad;
    }
    if (a.circuits) {
      const Circuit circuit = build_subs_parity(set, c);
      circuit_bad += count_indicator_mismatches(circuit, a.n, a.n,
                                                [&](Word x) { return popcount(x) % 2 == set.parity(); });
    }
  }
  SuiteReport s;
  s.suite = "subs";
  s.params = {{"n", a.n}, {"trials", a.trials}, {"c", a.c}, {"seed", a.seed}, {"circuits", a.circuits}};
  s.add("covering mismatches", covering_bad, 0, covering_bad == 0);
  if (a.circuits) s.add("parity-class circuit mismatches", circuit_bad, 0, circuit_bad == 0);
  s.details = {{"max_d", max_d}, {"max_d_minus_c_plus_1", worst_excess}, {"trials_with_d_above_c_minus_1", above}};
  return s;
}

SuiteReport suite_restrict(const RestrictArgs& a) {
  if (a.n < 1 || a.n > 16) throw std::invalid_argument("restrict suite needs 1 <= n <= 16");
  CounterRng rng(a.seed, kStreamRestrict);
  int non_unique = 0;
  int worst_excess = -a.n;
  int max_k = 0;
  for (int t = 0; t < a.trials; ++t) {
    // Sizes spread over every power-of-two scale up to 2^(n-1).
    const int e = static_cast<int>(rng.between(0, a.n - 1));
    const std::int64_t hi = std::int64_t{1} << e;
    const auto size = static_cast<std::uint64_t>(rng.between(hi / 2 + 1, hi));
    const int parity = static_cast<int>(rng.below(2));
    const ParityRestrictedSet set = sample_parity_restricted_set(a.n, size, parity, rng);
    const Restriction r = restrict_fixing_indices(set);
    Word mask = 0;
    for (int i : r.indices) mask |= single_bit(a.n, i);
    const auto members = set.members();
    const auto agreeing = std::count_if(members.begin(), members.end(),
                                        [&](Word s) { return (s & mask) == (r.element & mask); });
    if (agreeing != 1 || !set.contains(r.element)) ++non_unique;
    const int k = static_cast<int>(r.indices.size());
    max_k = std::max(max_k, k);
    worst_excess = std::max(worst_excess, k - ceil_log2(size));
  }
  SuiteReport s;
  s.suite = "restrict";
  s.params = {{"n", a.n}, {"trials", a.trials}, {"seed", a.seed}, {"circuits", a.circuits}};
  s.add("non-unique restrictions", non_unique, 0, non_unique == 0);
  s.add("max (k - ceil(log2 |S|))", worst_excess, 0, worst_excess <= 0);
  s.details = {{"max_k", max_k}};
  if (a.circuits) {
    int bad = 0;
    nlohmann::json trees = nlohmann::json::array();
    for (int width = 2; width <= std::min(a.n, 8); ++width) {
      const Circuit tree = make_toffoli({width, a.epsilon});
      const Word all = low_mask(width);
      bad += count_indicator_mismatches(tree, width, width, [all](Word x) { return x == all; });
      trees.push_back({{"n", width}, {"qubits", tree.qubit_count()}, {"depth", tree.depth()}, {"size", tree.size()}});
    }
    s.add("AND tree mismatches", bad, 0, bad == 0);
    s.details["trees"] = std::move(trees);
    s.params["epsilon"] = a.epsilon;
  }
  return s;
}

SuiteReport suite_equivalences(const EquivalenceArgs& a) {
  const int n = a.n;
  if (n < 2 || n > 6) throw std::invalid_argument("equivalence suite needs 2 <= n <= 6");
  SuiteReport s;
  s.suite = "equivalences";
  s.params = {{"n", n}};
  const auto data = wire_range(1, n);

  {
    Circuit fan(n + 1);
    fan.add_gate(gates::fanout_gate(0, data));
    const double circuit_form = operator_distance(circuit_to_matrix(conjugate_by_hadamards(fan)), ideal_parity(n));
    const DenseOperator h = hadamard_all(n + 1);
    const double dense_form = operator_distance(h * ideal_fanout(n) * h, ideal_parity(n));
    const double worst = std::max(circuit_form, dense_form);
    s.add("H-conjugated Fanout equals Parity", worst, kExactTolerance, worst <= kExactTolerance);
  }

  {
    std::vector<GateInstance> gs = {
        gates::hadamard(0),
        gates::pauli_x(1),
        gates::single_qubit(0, gates::pauli_z_matrix(), "Z"),
        gates::cnot(0, 1),
        gates::cz(0, 1),
        gates::toffoli(data, 0),
        gates::threshold_gate(n, (n + 1) / 2, 0, data),
        gates::parity_gate(data, 0),
        gates::fanout_gate(0, data),
        gates::mod_gate(n, 3, 1, data, 0),
        gates::or_gate(data, 0),
        gates::phase_oracle(ParityRestrictedSet::hamming_slice(n + 1, 2).membership(), wire_range(0, n + 1), "U_S"),
        gates::flag_oracle(ParityRestrictedSet::hamming_slice(n, 1).membership(), data, 0, "U_S flag"),
        gates::u_sigma_power(n + 1, 1, wire_range(0, n + 1)),
    };
    double worst = 0.0;
    double worst_adjoint = 0.0;
    for (const auto& g : gs) {
      Circuit twice(n + 1);
      Circuit with_adjoint(n + 1);
      twice.add_gate(g);
      with_adjoint.add_gate(g);
      with_adjoint.add_gate(g.adjoint());
      worst_adjoint = std::max(worst_adjoint, operator_distance(circuit_to_matrix(with_adjoint), identity(n + 1)));
      // The cyclic rotation is the only gate here that is not an involution.
      if (g.kind_name() == "wire_permutation") continue;
      twice.add_gate(g);
      worst = std::max(worst, operator_distance(circuit_to_matrix(twice), identity(n + 1)));
    }
    s.add("self-inverse gates square to identity", worst, kExactTolerance, worst <= kExactTolerance);
    s.add("gate times adjoint is identity", worst_adjoint, kExactTolerance, worst_adjoint <= kExactTolerance);
  }

  {
    double worst = 0.0;
    for (int m = 2; m <= 3; ++m) {
      for (int ell = 0; ell < m; ++ell) {
        // Layout [controls, target, zero ancillas].
        const auto controls = wire_range(0, n);
        const Circuit compiled = gates::mod_gate_compiled(n + m, n, m, ell, controls, wire_range(n + 1, m - 1), n);
        Circuit direct(n + 1);
        direct.add_gate(gates::mod_gate(n, m, ell, controls, n));
        worst = std::max(worst, operator_distance(circuit_to_isometry(compiled, m - 1),
                                                  embed_with_zero_ancillas(circuit_to_matrix(direct), m - 1)));
      }
    }
    s.add("compiled MOD equals MOD", worst, kExactTolerance, worst <= kExactTolerance);
  }

  {
    // Kickback phases against the diagonal they should produce.
    auto kickback_distance = [&](const std::vector<GateInstance>& body, const std::function<bool(Word)>& phase) {
      Circuit c(n + 1);
      c.add_gate(gates::pauli_x(n));
      c.add_gate(gates::hadamard(n));
      for (const auto& g : body) c.add_gate(g);
      c.add_gate(gates::hadamard(n));
      c.add_gate(gates::pauli_x(n));
      DenseOperator diag = DenseOperator::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
      for (Word x = 0; x < (Word{1} << n); ++x) diag(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x)) = phase(x) ? -1.0 : 1.0;
      return operator_distance(circuit_to_isometry(c, 1), embed_with_zero_ancillas(diag, 1));
    };
    const auto controls = wire_range(0, n);
    double worst = 0.0;
    for (int k = 0; k <= n; ++k) {
      worst = std::max(worst, kickback_distance(gates::exact_phase_gate(n, k, controls, n),
                                                [k](Word x) { return popcount(x) == k; }));
    }
    if (n % 2 == 0) {
      worst = std::max(worst, kickback_distance(gates::slice_us_gate(n, controls, n),
                                                [n](Word x) { return popcount(x) == n / 2; }));
    }
    s.add("threshold kickback equals exact-weight phase", worst, kExactTolerance, worst <= kExactTolerance);
  }

  {
    double worst = 0.0;
    for (const auto& set : {ParityRestrictedSet::hamming_slice(n, n / 2), ParityRestrictedSet::singleton(n, low_mask(n))}) {
      const auto dim = Eigen::Index{1} << n;
      Eigen::VectorXcd psi(dim);
      for (Eigen::Index y = 0; y < dim; ++y) {
        double sum = 0.0;
        for (Word x = 0; x < static_cast<Word>(dim); ++x) {
          const int sign = (popcount(x & static_cast<Word>(y)) + (set.contains(x) ? 1 : 0)) % 2;
          sum += sign ? -1.0 : 1.0;
        }
        psi(y) = std::ldexp(sum, -n);
      }
      const DenseOperator ideal = DenseOperator::Identity(dim, dim) - 2.0 * psi * psi.adjoint();
      worst = std::max(worst, operator_distance(circuit_to_matrix(build_reflection(set)), ideal));
    }
    s.add("reflection equals I - 2|psi_S><psi_S|", worst, kExactTolerance, worst <= kExactTolerance);
  }

  {
    int bad = 0;
    for (int p : {2, 3, 5}) {
      for (int k = 0; k < p; ++k) {
        Circuit c(p);
        c.add_gate(gates::u_sigma_power(p, k, wire_range(0, p)));
        for (int j = 0; j < p; ++j) {
          BitVector in(static_cast<std::size_t>(p), 0);
          in[static_cast<std::size_t>(j)] = 1;
          BitVector want(static_cast<std::size_t>(p), 0);
          want[static_cast<std::size_t>(((j - k) % p + p) % p)] = 1;
          if (basis_image(c, in).bits != want) ++bad;
        }
      }
    }
    s.add("cyclic rotation decrements encoded values", bad, 0, bad == 0);
  }
  return s;
}

}  // namespace neko::cli
