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

#include <functional>
#include <vector>

#include "neko/circuit.hpp"
#include "neko/fsets.hpp"

namespace neko {

/// How U_S is realized inside a reflection.
enum class UsMode {
  kDirect,             // one phase-predicate gate over the column
  kThresholdCompiled,  // Hamming slices only: two Threshold gates kicking back on a |-> ancilla
};

/// gamma_1 = |S|^2 / 2^(2n-2).
double grid_gamma1(int n, double set_size);

/// Column count m = max(1, floor(x + 1/2)) with x = -ln 2 / (2 ln(1 - 2 gamma_1)).
/// Throws std::invalid_argument when gamma_1 >= 1/2.
int compute_m(int n, double set_size);
int compute_m_from_gamma(double gamma1);

/// Reflection I - 2|psi_S><psi_S| with psi_S = H^n U_S H^n |0^n>, as the
/// layer sequence H, U_S, H, X, C^nZ, X, H, U_S, H on wires [0, n). In
/// threshold-compiled mode wire n is a kickback ancilla that starts and ends
/// in |0>.
Circuit build_reflection(const ParityRestrictedSet& set, UsMode mode = UsMode::kDirect);

/// Grid geometry. Column c, row r lives on wire c * n + r; column 0 holds the
/// targets. In threshold-compiled mode the kickback ancilla of column c >= 1
/// is wire n * (m + 1) + c - 1.
struct GridParams {
  int n;
  ParityRestrictedSet set;
  int m;

  int grid_wire(int column, int row) const { return column * n + row; }
  std::vector<int> target_wires() const { return wire_range(0, n); }
  int qubit_count(UsMode mode) const { return n * (m + 1) + (mode == UsMode::kThresholdCompiled ? m : 0); }
  void validate() const;
};

/// X layer on the m non-target columns, R_psi_S on each of them, then one
/// generalized Toffoli per row from the m non-target bits into the row's
/// target. Targets stay |0^n> until the Toffoli layer.
Circuit build_grid_nekomata(const GridParams& params, UsMode mode = UsMode::kDirect);

/// H on wire 0 followed by a CNOT ladder: |0^n> -> (|0^n> + |1^n>)/sqrt2.
Circuit build_cat_state(int n);

/// Fanout from wire 0 onto wires 1..n-1: (a|0> + b|1>)|0^(n-1)> -> a|0^n> + b|1^n>.
Circuit build_fanout_catlike(int n);

/// Parity from an exact nekomata preparer. Layout [b, x_1..x_n, preparer
/// wires...] with n = targets.size(); `targets` are preparer wires. Layers:
/// C, CZ(x_i, target_i), C^dg, OR(all preparer wires) -> b, C, CZ, C^dg.
Circuit build_nekomata_to_parity(const Circuit& preparer, const std::vector<int>& targets);

/// Parity from a cat-like circuit. Layout [b, x_1..x_n, catlike wires 1..]:
/// catlike wire 0 is b, wire w >= 1 is global wire n + w. The cat appears on
/// `cat_wires` (catlike indices, starting with 0) and n = cat_wires.size().
/// Layers: H(b), catlike, CZ(x_i, cat_i), catlike^dg, H(b).
Circuit build_cat_to_parity(const Circuit& catlike, const std::vector<int>& cat_wires);
Circuit build_cat_to_parity(const Circuit& catlike);

/// H layer on `wires`, the circuit, H layer on `wires`.
Circuit conjugate_by_hadamards(const Circuit& circuit, const std::vector<int>& wires);
Circuit conjugate_by_hadamards(const Circuit& circuit);

/// Wires of the mod-p fanout circuit: n + 1 one-hot blocks (block 0 is b)
/// followed by p counter blocks, p wires each.
struct ModpLayout {
  int p;
  int n;

  int block_wire(int block, int k) const { return p * block + k; }
  int counter_wire(int k, int value) const { return p * (n + 1) + p * k + value; }
  int qubit_count() const { return p * (n + 1) + p * p; }
};

/// Encoded M_{n,p}: E|b>E|x> -> E|b - |x| mod p>E|x>, counters returned to 0.
/// MOD ladders compute E|s_k> into counter block k, controlled U_sigma^(k v)
/// act on block 0, then the ladders repeat to uncompute.
Circuit build_encoded_mod_sum(int p, int n);

/// Input preparation, Q~_p on every block, encoded M_{n,p}, Q~_p^dg on every
/// block. Maps (a|0> + b|1>)|0...> to (a E|0>^(n+1) + b E|1>^(n+1)) (x) |0^(p^2)>.
Circuit build_modp_fanout(int p, int n);

/// build_modp_fanout followed by X on the first wire of every block, so the
/// output is a|0^(2(n+1))> + b|1^(2(n+1))> on `cat_wires` with every other
/// wire |0>. cat_wires lists wires 0, 1 of block 0, then of block 1, etc.
struct ModpCatlike {
  Circuit circuit;
  std::vector<int> cat_wires;
};
ModpCatlike build_modp_catlike(int p, int n);

/// Parity-class indicator out ^= [|x| = parity(S) mod 2] from S-membership
/// flag oracles. Layout [x_1..x_n, out, 2^d copy blocks of n wires, 2^d
/// flags], d = number of complement basis vectors.
Circuit build_subs_parity(const ParityRestrictedSet& set, int c);

using SetProvider = std::function<ParityRestrictedSet(int k)>;

/// S_k = { y 1^(k-h-1) q(y) : y in {0,1}^h } with h = floor((1 - epsilon) k)
/// clamped to [0, k - 2] and q(y) the even-parity bit. |S_k| = 2^h.
ParityRestrictedSet block_code_set(int k, double epsilon);

/// AND_n from U_S flag oracles arranged in a tree. Each node uses the set
/// provider(n) restricted by restrict_fixing_indices: fixed indices hold
/// ancillas preset to the restriction element, free indices take the node's
/// inputs X-dressed so all-ones maps to the unique completion. Layout
/// [x_1..x_n, target, ancillas...]. Lower levels are uncomputed.
Circuit build_toffoli_from_small_us(const SetProvider& provider, double epsilon, int n);

/// Number of tree levels used by build_toffoli_from_small_us.
int toffoli_tree_levels(int n, int arity);

}  // namespace neko
