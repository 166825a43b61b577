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
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "neko/circuit.hpp"
#include "neko/fsets.hpp"
#include "neko/statevector.hpp"

namespace neko {

/// Outcome statistics of one non-target grid column, R_psi_S |1^n>.
struct ColumnStats {
  int n = 0;
  double set_size = 0.0;
  double gamma0 = 0.0;  // <0^n|psi_S>^2
  double gamma1 = 0.0;  // <1^n|psi_S>^2
  double p0 = 0.0;      // 4 gamma0 gamma1
  double p1 = 0.0;      // (1 - 2 gamma1)^2
  /// Exact outcome distribution indexed by the packed n-bit pattern; empty
  /// unless requested.
  std::vector<double> distribution;
};

/// Formula values, plus the simulated distribution when `with_distribution`
/// (dense n-qubit simulation, subject to the qubit budget).
ColumnStats column_stats(const ParityRestrictedSet& set, bool with_distribution);

/// Target-column statistics of the m-column grid.
struct GridDistribution {
  int n = 0;
  int m = 0;
  double set_size = 0.0;
  double gamma0 = 0.0;
  double gamma1 = 0.0;
  double p0 = 0.0;
  double p1 = 0.0;
  double p_zero = 0.0;       // targets read 0^n
  double p_one = 0.0;        // targets read 1^n, p1^m
  double p_mixed = 0.0;      // targets read anything else
  double p_bad = 0.0;        // some column reads neither 0^n nor 1^n
  double p_bad_union = 0.0;  // m (1 - p0 - p1)
  double fidelity = 0.0;     // (sqrt(p_zero) + sqrt(p_one))^2 / 2
  double epsilon = 0.0;      // 1 - fidelity
};

/// Exact target distribution from a column distribution: P_one = p1^m and
/// P_zero by inclusion-exclusion over row subsets T,
/// P_zero = sum_T (-1)^|T| q_T^m with q_T the column mass on strings that are
/// 1 on every row of T. Requires stats.distribution and n <= 20.
GridDistribution grid_target_distribution(const ColumnStats& stats, int m);

/// Krawtchouk value K_w(j) = sum_i (-1)^i C(j, i) C(n - j, w - i).
BigInt krawtchouk(int n, int w, int j);

/// Same quantities for S = Hamming slice of weight w, from weight symmetry in
/// exact dyadic arithmetic. Requires even n <= 128.
GridDistribution slice_symmetric_stats(int n, int w, int m);

/// ((||Pi_0 phi|| + ||Pi_1 phi||)^2) / 2 with Pi_b projecting `targets` onto b^n.
double nekomata_fidelity(const StateVector& state, std::span<const int> targets);

enum class BoundMode { kDense, kSymmetric };

struct BoundCheck {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct NekomataReport {
  GridDistribution grid;
  std::string set_text;
  double bound_p1 = 0.0;        // 1/2 - |S|^2 / 2^(2n-2)
  double bound_bad = 0.0;       // |S| / 2^(n-2)
  double bound_zero = 0.0;      // 1/2 - |S| / 2^(n-2)
  double bound_fidelity = 0.0;  // 1 - |S| / 2^(n-3)
  std::vector<BoundCheck> checks;
  bool non_vacuous = false;  // every right-hand side strictly inside (0, 1)
  bool pass = false;
};

/// Checks the four grid inequalities. m <= 0 selects compute_m. Throws
/// std::invalid_argument when gamma_1 > 1/16, or when symmetric mode is asked
/// for a set that is not a Hamming slice.
NekomataReport verify_grid_bounds(const ParityRestrictedSet& set, int m, BoundMode mode);

/// Terms of the inequality chain behind the column count:
/// (1 - 2g)/2 <= (1 - 2g)^(2m) <= exp(-4 m g) and 4 m g <= -ln(1/2 - g) < 1.
struct InequalityChain {
  double gamma1 = 0.0;
  int m = 0;
  double half_shrunk = 0.0;   // (1 - 2g)/2
  double power = 0.0;         // (1 - 2g)^(2m)
  double exponential = 0.0;   // exp(-4 m g)
  double four_m_gamma = 0.0;  // 4 m g
  double log_bound = 0.0;     // -ln(1/2 - g)
  bool holds = false;
};
InequalityChain grid_inequality_chain(double gamma1);

/// Both sides of M_{n,p} = (Q_p^dg)^(n+1) Fanout_{n,p} Q_p^(n+1) built from
/// p-ary digit arithmetic. Digit order (b, x_1..x_n), b most significant.
std::pair<DenseOperator, DenseOperator> qudit_mod_oracle(int p, int n);

/// Per-input comparison of a circuit against an ideal operator on its leading
/// data wires, with trailing ancillas starting and ideally ending in 0.
struct ErrorProfile {
  std::vector<double> l2;        // ||C|j,0> - (U|j>)|0>||
  std::vector<double> fidelity;  // |<(U|j>)|0> | C|j,0>|^2
  double max_l2 = 0.0;
  double min_fidelity = 1.0;
};
ErrorProfile basis_error_profile(const Circuit& circuit, const DenseOperator& ideal, int ancilla_count);

/// Operator-norm comparison that never forms the full isometry. W is the
/// ancilla-zero block <i,0|C|j,0>; leakage is the Frobenius norm of the rest,
/// so ||C_iso - U (x) |0>|| <= ||W - U|| + leakage.
struct IsometryCheck {
  double block_distance = 0.0;
  double leakage = 0.0;
  double bound = 0.0;
  double max_l2 = 0.0;
};
IsometryCheck isometry_check(const Circuit& circuit, const DenseOperator& ideal, int ancilla_count);

nlohmann::json to_json(const GridDistribution& grid);
nlohmann::json to_json(const NekomataReport& report);

/// Stable CSV schema for grid sweeps.
std::string grid_sweep_header();
std::string grid_sweep_row(const NekomataReport& report);

}  // namespace neko
