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

#include "neko/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace neko::gates {
namespace {

std::vector<int> concat(std::span<const int> a, int b) {
  std::vector<int> out(a.begin(), a.end());
  out.push_back(b);
  return out;
}

std::string nk(int n, int k) { return std::to_string(n) + "," + std::to_string(k); }

}  // namespace

Eigen::Matrix2cd hadamard_matrix() {
  const double s = std::numbers::sqrt2 / 2.0;
  Eigen::Matrix2cd h;
  h << s, s, s, -s;
  return h;
}

Eigen::Matrix2cd pauli_x_matrix() {
  Eigen::Matrix2cd x;
  x << 0.0, 1.0, 1.0, 0.0;
  return x;
}

Eigen::Matrix2cd pauli_z_matrix() {
  Eigen::Matrix2cd z;
  z << 1.0, 0.0, 0.0, -1.0;
  return z;
}

GateInstance single_qubit(int wire, const Eigen::Matrix2cd& u, std::string label) {
  return GateInstance{SingleQubitGate{u}, {wire}, std::move(label)};
}

GateInstance hadamard(int wire) { return single_qubit(wire, hadamard_matrix(), "H"); }

GateInstance pauli_x(int wire) { return single_qubit(wire, pauli_x_matrix(), "X"); }

GateInstance cnot(int control, int target) {
  return GateInstance{FlipPredicateGate{BitPredicate::all_ones(1)}, {control, target}, "CNOT"};
}

GateInstance cz(int a, int b) {
  return GateInstance{PhasePredicateGate{BitPredicate::all_ones(2)}, {a, b}, "CZ"};
}

GateInstance threshold_gate(int n, int k, int target, std::span<const int> controls) {
  if (static_cast<int>(controls.size()) != n) {
    throw std::invalid_argument("threshold gate expects " + std::to_string(n) + " controls");
  }
  if (k < 0 || k > n) {
    throw std::invalid_argument("threshold k=" + std::to_string(k) + " must lie in [0, n=" +
                                std::to_string(n) + "]");
  }
  GateInstance g{FlipPredicateGate{BitPredicate::weight_at_least(n, k)}, concat(controls, target),
                 "Threshold[" + nk(n, k) + "]"};
  g.validate();
  return g;
}

GateInstance toffoli(std::span<const int> controls, int target) {
  const auto n = static_cast<int>(controls.size());
  GateInstance g{FlipPredicateGate{BitPredicate::all_ones(n)}, concat(controls, target),
                 "Toffoli[" + std::to_string(n) + "]"};
  g.validate();
  return g;
}

std::vector<GateInstance> exact_phase_gate(int n, int k, std::span<const int> controls, int ancilla) {
  std::vector<GateInstance> out;
  out.push_back(threshold_gate(n, k, ancilla, controls));
  if (k < n) out.push_back(threshold_gate(n, k + 1, ancilla, controls));
  for (auto& g : out) g.label = "Exact[" + nk(n, k) + "]/" + g.label;
  return out;
}

std::vector<GateInstance> slice_us_gate(int n, std::span<const int> wires, int ancilla) {
  if (n % 2 != 0) {
    throw std::invalid_argument("slice U_S needs even n; pad odd inputs with one ancilla");
  }
  auto out = exact_phase_gate(n, n / 2, wires, ancilla);
  for (auto& g : out) g.label = "SliceUS[" + std::to_string(n) + "]/" + g.label;
  return out;
}

GateInstance mod_gate(int n, int m, int ell, std::span<const int> controls, int target) {
  if (m < 2) throw std::invalid_argument("MOD modulus must be at least 2");
  if (static_cast<int>(controls.size()) != n) {
    throw std::invalid_argument("MOD gate expects " + std::to_string(n) + " controls");
  }
  GateInstance g{FlipPredicateGate{BitPredicate::weight_mod(n, m, ell)}, concat(controls, target),
                 "MOD[" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(ell) + "]"};
  g.validate();
  return g;
}

int mod_gate_preset_ones(int m, int ell) {
  if (m < 2) throw std::invalid_argument("MOD modulus must be at least 2");
  if (ell < 0 || ell >= m) throw std::invalid_argument("residue must lie in [0, m)");
  return (m - ell) % m;
}

Circuit mod_gate_compiled(int qubit_count, int n, int m, int ell, std::span<const int> controls,
                          std::span<const int> ancillas, int target) {
  const int ones = mod_gate_preset_ones(m, ell);
  if (static_cast<int>(ancillas.size()) != m - 1) {
    throw std::invalid_argument("compiled MOD needs m - 1 ancillas");
  }
  if (static_cast<int>(controls.size()) != n) {
    throw std::invalid_argument("MOD gate expects " + std::to_string(n) + " controls");
  }
  Circuit c(qubit_count, "mod-compiled");
  Layer preset;
  for (int i = 0; i < ones; ++i) preset.push_back(pauli_x(ancillas[static_cast<std::size_t>(i)]));
  std::vector<int> wide(controls.begin(), controls.end());
  wide.insert(wide.end(), ancillas.begin(), ancillas.end());
  if (!preset.empty()) c.add_layer(preset);
  c.add_gate(mod_gate(n + m - 1, m, 0, wide, target));
  if (!preset.empty()) c.add_layer(preset);
  return c;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

GateInstance q_tilde_gate(int p, std::span<const int> block) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (static_cast<int>(block.size()) != p) throw std::invalid_argument("Q~_p block must have p wires");
  if (p > 12) throw std::invalid_argument("Q~_p dense block supports p <= 12");
  const auto dim = Eigen::Index{1} << p;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  auto one_hot = [p](int j) { return Eigen::Index{1} << (p - 1 - j); };
  for (int j = 0; j < p; ++j) u(one_hot(j), one_hot(j)) = 0.0;
  const double scale = 1.0 / std::sqrt(static_cast<double>(p));
  for (int j = 0; j < p; ++j) {
    for (int k = 0; k < p; ++k) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * k) % p) / p;
      u(one_hot(k), one_hot(j)) = scale * Complex(std::cos(angle), std::sin(angle));
    }
  }
  GateInstance g{DenseGate{std::move(u)}, std::vector<int>(block.begin(), block.end()),
                 "Qt[" + std::to_string(p) + "]"};
  g.validate();
  return g;
}

GateInstance u_sigma_power(int p, int k, std::span<const int> block) {
  if (static_cast<int>(block.size()) != p) throw std::invalid_argument("U_sigma block must have p wires");
  const int shift = ((k % p) + p) % p;
  std::vector<int> perm(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) perm[static_cast<std::size_t>(i)] = (i + shift) % p;
  GateInstance g{PermutationGate{std::move(perm), 0}, std::vector<int>(block.begin(), block.end()),
                 "Usigma^" + std::to_string(shift)};
  g.validate();
  return g;
}

GateInstance controlled_u_sigma_power(int p, int k, int control, std::span<const int> block) {
  GateInstance g = u_sigma_power(p, k, block);
  auto& payload = std::get<PermutationGate>(g.kind);
  payload.control_count = 1;
  g.wires.insert(g.wires.begin(), control);
  g.label = "C-" + g.label;
  g.validate();
  return g;
}

std::vector<std::pair<int, int>> swap_decomposition(std::span<const int> perm) {
  const auto n = perm.size();
  std::vector<int> current(n);
  for (std::size_t i = 0; i < n; ++i) current[i] = static_cast<int>(i);
  std::vector<std::pair<int, int>> swaps;
  for (std::size_t i = 0; i < n; ++i) {
    if (current[i] == perm[i]) continue;
    std::size_t j = i + 1;
    while (j < n && current[j] != perm[i]) ++j;
    if (j == n) throw std::invalid_argument("swap_decomposition needs a permutation");
    std::swap(current[i], current[j]);
    swaps.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  return swaps;
}

GateInstance or_gate(std::span<const int> controls, int target) {
  const auto n = static_cast<int>(controls.size());
  GateInstance g{FlipPredicateGate{BitPredicate::not_all_zeros(n)}, concat(controls, target),
                 "OR[" + std::to_string(n) + "]"};
  g.validate();
  return g;
}

GateInstance parity_gate(std::span<const int> controls, int target) {
  const auto n = static_cast<int>(controls.size());
  GateInstance g{FlipPredicateGate{BitPredicate::weight_mod(n, 2, 1)}, concat(controls, target),
                 "Parity[" + std::to_string(n) + "]"};
  g.validate();
  return g;
}

GateInstance fanout_gate(int source, std::span<const int> targets) {
  std::vector<int> wires{source};
  wires.insert(wires.end(), targets.begin(), targets.end());
  GateInstance g{FanoutGate{}, std::move(wires), "Fanout[" + std::to_string(targets.size()) + "]"};
  g.validate();
  return g;
}

GateInstance phase_oracle(const BitPredicate& membership, std::span<const int> wires, std::string label) {
  GateInstance g{PhasePredicateGate{membership}, std::vector<int>(wires.begin(), wires.end()),
                 std::move(label)};
  g.validate();
  return g;
}

GateInstance flag_oracle(const BitPredicate& membership, std::span<const int> wires, int flag,
                         std::string label) {
  GateInstance g{FlipPredicateGate{membership}, concat(wires, flag), std::move(label)};
  g.validate();
  return g;
}

EncodedQuditLayout EncodedQuditLayout::contiguous(int p, int qudit_count, int first_wire) {
  EncodedQuditLayout layout;
  layout.p = p;
  layout.qudit_count = qudit_count;
  for (int j = 0; j < qudit_count; ++j) layout.wire_groups.push_back(wire_range(first_wire + p * j, p));
  layout.validate();
  return layout;
}

void EncodedQuditLayout::validate() const {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (static_cast<int>(wire_groups.size()) != qudit_count) {
    throw std::invalid_argument("layout block count does not match qudit count");
  }
  std::vector<int> all;
  for (const auto& group : wire_groups) {
    if (static_cast<int>(group.size()) != p) throw std::invalid_argument("layout block must have p wires");
    all.insert(all.end(), group.begin(), group.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw std::invalid_argument("layout blocks overlap");
  }
}

}  // namespace neko::gates
