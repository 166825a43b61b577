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

#include <span>
#include <utility>
#include <vector>

#include "neko/circuit.hpp"

namespace neko::gates {

// Standard single-qubit matrices.
Eigen::Matrix2cd hadamard_matrix();
Eigen::Matrix2cd pauli_x_matrix();
Eigen::Matrix2cd pauli_z_matrix();

GateInstance hadamard(int wire);
GateInstance pauli_x(int wire);
GateInstance single_qubit(int wire, const Eigen::Matrix2cd& u, std::string label);

GateInstance cnot(int control, int target);
GateInstance cz(int a, int b);

/// Threshold_{n,k}: target ^= [|x| >= k]. k = n is the generalized Toffoli.
GateInstance threshold_gate(int n, int k, int target, std::span<const int> controls);

/// Generalized Toffoli: target ^= AND(controls).
GateInstance toffoli(std::span<const int> controls, int target);

/// Phase (-1)^[|x| == k] by kickback on an ancilla the caller prepares in
/// |->: Threshold_{n,k} then Threshold_{n,k+1}, both targeting the ancilla.
/// For k = n a single gate suffices.
std::vector<GateInstance> exact_phase_gate(int n, int k, std::span<const int> controls, int ancilla);

/// U_S for the middle Hamming slice S = {x : |x| = n/2}, n even, as two
/// Threshold gates (multi-qubit depth 2) kicking back on a |-> ancilla.
std::vector<GateInstance> slice_us_gate(int n, std::span<const int> wires, int ancilla);

/// MOD_{n,m,ell}: target ^= [|x| == ell (mod m)]. Target is the last wire.
GateInstance mod_gate(int n, int m, int ell, std::span<const int> controls, int target);

/// Number of preset-1 ancillas in the compiled MOD_{n,m,ell}: (m - ell) mod m.
int mod_gate_preset_ones(int m, int ell);

/// MOD_{n,m,ell} built from a single MOD_{n+m-1,m,0} over the controls and
/// m - 1 zero-initialized ancillas, mod_gate_preset_ones of which are set to
/// 1 by X gates before and reset after. Returned as a three-layer circuit
/// over `qubit_count` wires.
Circuit mod_gate_compiled(int qubit_count, int n, int m, int ell, std::span<const int> controls,
                          std::span<const int> ancillas, int target);

/// Encoded Fourier transform: on the one-hot subspace
/// E|j> -> p^{-1/2} sum_k w^{jk} E|k> with w = exp(2 pi i / p); identity on
/// the orthogonal complement.
GateInstance q_tilde_gate(int p, std::span<const int> block);

/// Cyclic rotation U_sigma^k of a p-wire one-hot block: E|j> -> E|j - k mod p>.
GateInstance u_sigma_power(int p, int k, std::span<const int> block);

/// U_sigma^k applied only when `control` is 1.
GateInstance controlled_u_sigma_power(int p, int k, int control, std::span<const int> block);

/// Transpositions (i, j) whose left-to-right composition realizes `perm`
/// (new[i] = old[perm[i]]). Uses at most size - 1 swaps.
std::vector<std::pair<int, int>> swap_decomposition(std::span<const int> perm);

/// target ^= OR(controls).
GateInstance or_gate(std::span<const int> controls, int target);

/// Parity_n: target ^= x_1 xor ... xor x_n.
GateInstance parity_gate(std::span<const int> controls, int target);

/// Fanout from `source` onto each target.
GateInstance fanout_gate(int source, std::span<const int> targets);

/// Diagonal U_S given as a predicate over its wires.
GateInstance phase_oracle(const BitPredicate& membership, std::span<const int> wires, std::string label);

/// Bit-output U_S: flag ^= [x in S].
GateInstance flag_oracle(const BitPredicate& membership, std::span<const int> wires, int flag,
                         std::string label);

/// One-hot encoded qudit registers, one p-wire block per logical qudit.
struct EncodedQuditLayout {
  int p = 2;
  int qudit_count = 0;
  std::vector<std::vector<int>> wire_groups;

  /// Blocks [first + p*j, first + p*j + p) for j < qudit_count.
  static EncodedQuditLayout contiguous(int p, int qudit_count, int first_wire);
  void validate() const;
};

bool is_prime(int p);

}  // namespace neko::gates
