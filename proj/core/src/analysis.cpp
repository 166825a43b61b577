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

#include "neko/analysis.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "neko/constructions.hpp"
#include "neko/dense.hpp"
#include "neko/gates.hpp"

namespace neko {
namespace {

std::string number(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace

ColumnStats column_stats(const ParityRestrictedSet& set, bool with_distribution) {
  ColumnStats stats;
  stats.n = set.n();
  stats.set_size = set.size_as_double();
  const double overlap0 = 1.0 - std::ldexp(stats.set_size, -(stats.n - 1));
  stats.gamma0 = overlap0 * overlap0;
  stats.gamma1 = grid_gamma1(stats.n, stats.set_size);
  stats.p0 = 4.0 * stats.gamma0 * stats.gamma1;
  stats.p1 = (1.0 - 2.0 * stats.gamma1) * (1.0 - 2.0 * stats.gamma1);
  if (!with_distribution) return stats;

  require_budget(stats.n, "column distribution");
  Circuit column(stats.n, "column");
  Layer ones;
  for (int w = 0; w < stats.n; ++w) ones.push_back(gates::pauli_x(w));
  column.add_layer(std::move(ones));
  column.append(build_reflection(set));
  const StateVector out = run_circuit(column, StateVector(stats.n));
  stats.distribution.resize(out.dimension());
  for (std::uint64_t i = 0; i < out.dimension(); ++i) stats.distribution[i] = std::norm(out[i]);
  return stats;
}

GridDistribution grid_target_distribution(const ColumnStats& stats, int m) {
  const int n = stats.n;
  if (m < 1) throw std::invalid_argument("grid needs m >= 1");
  if (n > 20) throw BudgetExceeded("inclusion-exclusion over row subsets limited to n <= 20");
  if (stats.distribution.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("grid_target_distribution needs the column distribution");
  }
  const std::size_t dim = std::size_t{1} << n;
  // Superset sums: q[T] = sum over y containing T of d[y].
  std::vector<double> q = stats.distribution;
  for (std::size_t bit = 1; bit < dim; bit <<= 1) {
    for (std::size_t y = 0; y < dim; ++y) {
      if (!(y & bit)) q[y] += q[y | bit];
    }
  }
  GridDistribution g;
  g.n = n;
  g.m = m;
  g.set_size = stats.set_size;
  g.gamma0 = stats.gamma0;
  g.gamma1 = stats.gamma1;
  g.p0 = stats.distribution.front();
  g.p1 = stats.distribution.back();
  for (std::size_t t = 0; t < dim; ++t) {
    const double term = std::pow(q[t], m);
    g.p_zero += (popcount(t) & 1) ? -term : term;
  }
  g.p_one = std::pow(g.p1, m);
  g.p_mixed = 1.0 - g.p_zero - g.p_one;
  g.p_bad = 1.0 - std::pow(g.p0 + g.p1, m);
  g.p_bad_union = m * (1.0 - g.p0 - g.p1);
  const double root = std::sqrt(std::max(g.p_zero, 0.0)) + std::sqrt(std::max(g.p_one, 0.0));
  g.fidelity = root * root / 2.0;
  g.epsilon = 1.0 - g.fidelity;
  return g;
}

double nekomata_fidelity(const StateVector& state, std::span<const int> targets) {
  const auto t = static_cast<int>(targets.size());
  if (t < 1 || t > 64) throw std::invalid_argument("nekomata fidelity needs 1..64 targets");
  const double zero = projection_norm(state, targets, Word{0});
  const double one = projection_norm(state, targets, low_mask(t));
  return (zero + one) * (zero + one) / 2.0;
}

NekomataReport verify_grid_bounds(const ParityRestrictedSet& set, int m, BoundMode mode) {
  const int n = set.n();
  const double size = set.size_as_double();
  const double gamma1 = grid_gamma1(n, size);
  if (gamma1 > 1.0 / 16.0) {
    throw std::invalid_argument("grid bounds need gamma1 <= 1/16, got " + number(gamma1));
  }
  if (m <= 0) m = compute_m_from_gamma(gamma1);

  NekomataReport r;
  r.set_text = set.to_text();
  if (mode == BoundMode::kSymmetric) {
    if (set.form() != ParityRestrictedSet::Form::kHammingSlice) {
      throw std::invalid_argument("symmetric bound mode needs a Hamming slice");
    }
    r.grid = slice_symmetric_stats(n, set.slice_weight(), m);
  } else {
    r.grid = grid_target_distribution(column_stats(set, true), m);
  }
  r.bound_p1 = 0.5 - gamma1;
  r.bound_bad = std::ldexp(size, -(n - 2));
  r.bound_zero = 0.5 - r.bound_bad;
  r.bound_fidelity = 1.0 - std::ldexp(size, -(n - 3));
  r.checks = {
      {"p_one > 1/2 - |S|^2/2^(2n-2)", r.grid.p_one, r.bound_p1, r.grid.p_one > r.bound_p1},
      {"p_bad < |S|/2^(n-2)", r.grid.p_bad, r.bound_bad, r.grid.p_bad < r.bound_bad},
      {"p_zero >= 1/2 - |S|/2^(n-2)", r.grid.p_zero, r.bound_zero, r.grid.p_zero >= r.bound_zero},
      {"fidelity >= 1 - |S|/2^(n-3)", r.grid.fidelity, r.bound_fidelity, r.grid.fidelity >= r.bound_fidelity},
  };
  r.pass = true;
  for (const auto& c : r.checks) r.pass = r.pass && c.pass;
  r.non_vacuous = true;
  for (double b : {r.bound_p1, r.bound_bad, r.bound_zero, r.bound_fidelity}) {
    r.non_vacuous = r.non_vacuous && b > 0.0 && b < 1.0;
  }
  return r;
}

InequalityChain grid_inequality_chain(double gamma1) {
  InequalityChain c;
  c.gamma1 = gamma1;
  c.m = compute_m_from_gamma(gamma1);
  const double shrink = 1.0 - 2.0 * gamma1;
  c.half_shrunk = shrink / 2.0;
  c.power = std::pow(shrink, 2 * c.m);
  c.exponential = std::exp(-4.0 * c.m * gamma1);
  c.four_m_gamma = 4.0 * c.m * gamma1;
  c.log_bound = -std::log(0.5 - gamma1);
  c.holds = c.half_shrunk <= c.power && c.power <= c.exponential && c.four_m_gamma <= c.log_bound &&
            c.log_bound < 1.0;
  return c;
}

std::pair<DenseOperator, DenseOperator> qudit_mod_oracle(int p, int n) {
  if (!gates::is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (n < 1) throw std::invalid_argument("qudit oracle needs n >= 1");
  Eigen::Index dim = 1;
  for (int i = 0; i <= n; ++i) {
    dim *= p;
    if (dim > 8192) throw BudgetExceeded("p^(n+1) exceeds 2^13");
  }
  auto digits = [&](Eigen::Index index) {
    std::vector<int> d(static_cast<std::size_t>(n + 1));
    for (int i = n; i >= 0; --i) {
      d[static_cast<std::size_t>(i)] = static_cast<int>(index % p);
      index /= p;
    }
    return d;
  };
  auto pack = [&](const std::vector<int>& d) {
    Eigen::Index index = 0;
    for (int v : d) index = index * p + v;
    return index;
  };

  DenseOperator mod = DenseOperator::Zero(dim, dim);
  DenseOperator fan = DenseOperator::Zero(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    const auto d = digits(c);
    int weight = 0;
    for (int i = 1; i <= n; ++i) weight += d[static_cast<std::size_t>(i)];
    auto m_out = d;
    m_out[0] = ((d[0] - weight) % p + p) % p;
    mod(pack(m_out), c) = 1.0;
    auto f_out = d;
    for (int i = 1; i <= n; ++i) f_out[static_cast<std::size_t>(i)] = (d[static_cast<std::size_t>(i)] + d[0]) % p;
    fan(pack(f_out), c) = 1.0;
  }

  DenseOperator q1(p, p);
  const double scale = 1.0 / std::sqrt(static_cast<double>(p));
  for (int j = 0; j < p; ++j) {
    for (int b = 0; b < p; ++b) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * b) % p) / p;
      q1(j, b) = scale * Complex(std::cos(angle), std::sin(angle));
    }
  }
  DenseOperator q_all = q1;
  for (int i = 0; i < n; ++i) q_all = kron(q_all, q1);
  DenseOperator rhs = q_all.adjoint() * fan * q_all;
  return {std::move(mod), std::move(rhs)};
}

ErrorProfile basis_error_profile(const Circuit& circuit, const DenseOperator& ideal, int ancilla_count) {
  const int q = circuit.qubit_count();
  const int data = q - ancilla_count;
  require_budget(q, "basis error profile");
  if (data < 0 || ideal.rows() != (Eigen::Index{1} << data) || ideal.cols() != ideal.rows()) {
    throw std::invalid_argument("ideal operator does not match the data wires");
  }
  ErrorProfile profile;
  for (Eigen::Index j = 0; j < ideal.cols(); ++j) {
    const StateVector out =
        run_circuit(circuit, StateVector::basis_index(q, static_cast<std::uint64_t>(j) << ancilla_count));
    double err = 0.0;
    Complex overlap = 0.0;
    for (std::uint64_t i = 0; i < out.dimension(); ++i) {
      Complex expected = 0.0;
      if ((i & low_mask(ancilla_count)) == 0) expected = ideal(static_cast<Eigen::Index>(i >> ancilla_count), j);
      err += std::norm(out[i] - expected);
      overlap += std::conj(expected) * out[i];
    }
    profile.l2.push_back(std::sqrt(err));
    profile.fidelity.push_back(std::norm(overlap));
    profile.max_l2 = std::max(profile.max_l2, profile.l2.back());
    profile.min_fidelity = std::min(profile.min_fidelity, profile.fidelity.back());
  }
  return profile;
}

IsometryCheck isometry_check(const Circuit& circuit, const DenseOperator& ideal, int ancilla_count) {
  const int q = circuit.qubit_count();
  const int data = q - ancilla_count;
  require_budget(q, "isometry check");
  if (data < 0 || ideal.rows() != (Eigen::Index{1} << data) || ideal.cols() != ideal.rows()) {
    throw std::invalid_argument("ideal operator does not match the data wires");
  }
  IsometryCheck check;
  DenseOperator block(ideal.rows(), ideal.cols());
  double leak_sq = 0.0;
  for (Eigen::Index j = 0; j < ideal.cols(); ++j) {
    const StateVector out =
        run_circuit(circuit, StateVector::basis_index(q, static_cast<std::uint64_t>(j) << ancilla_count));
    double kept = 0.0;
    double err = 0.0;
    for (Eigen::Index i = 0; i < ideal.rows(); ++i) {
      block(i, j) = out[static_cast<std::uint64_t>(i) << ancilla_count];
      kept += std::norm(block(i, j));
      err += std::norm(block(i, j) - ideal(i, j));
    }
    const double lost = std::max(0.0, out.norm() * out.norm() - kept);
    leak_sq += lost;
    check.max_l2 = std::max(check.max_l2, std::sqrt(err + lost));
  }
  check.block_distance = operator_distance(block, ideal);
  check.leakage = std::sqrt(leak_sq);
  check.bound = check.block_distance + check.leakage;
  return check;
}

nlohmann::json to_json(const GridDistribution& g) {
  return {{"n", g.n},
          {"m", g.m},
          {"set_size", g.set_size},
          {"gamma0", g.gamma0},
          {"gamma1", g.gamma1},
          {"p0", g.p0},
          {"p1", g.p1},
          {"p_zero", g.p_zero},
          {"p_one", g.p_one},
          {"p_mixed", g.p_mixed},
          {"p_bad", g.p_bad},
          {"p_bad_union", g.p_bad_union},
          {"fidelity", g.fidelity},
          {"epsilon", g.epsilon}};
}

nlohmann::json to_json(const NekomataReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"check", c.name}, {"value", c.value}, {"bound", c.bound}, {"pass", c.pass}});
  }
  return {{"set", r.set_text},
          {"grid", to_json(r.grid)},
          {"bound_p1", r.bound_p1},
          {"bound_bad", r.bound_bad},
          {"bound_zero", r.bound_zero},
          {"bound_fidelity", r.bound_fidelity},
          {"statement_epsilon", r.grid.gamma1},
          {"checks", std::move(checks)},
          {"non_vacuous", r.non_vacuous},
          {"pass", r.pass}};
}

std::string grid_sweep_header() {
  return "n,set,m,gamma1,p_one,p_zero,p_bad,fidelity,bound_p1,bound_bad,bound_zero,bound_fidelity,pass";
}

std::string grid_sweep_row(const NekomataReport& r) {
  const auto& g = r.grid;
  std::string row = std::to_string(g.n) + "," + csv_field(r.set_text) + "," + std::to_string(g.m);
  for (double v : {g.gamma1, g.p_one, g.p_zero, g.p_bad, g.fidelity, r.bound_p1, r.bound_bad, r.bound_zero,
                   r.bound_fidelity}) {
    row += "," + number(v);
  }
  return row + "," + (r.pass ? "true" : "false");
}

}  // namespace neko
