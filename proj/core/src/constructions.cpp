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

#include "neko/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "neko/gates.hpp"

namespace neko {
namespace {

Layer hadamard_layer(const std::vector<int>& wires) {
  Layer layer;
  for (int w : wires) layer.push_back(gates::hadamard(w));
  return layer;
}

Layer x_layer(const std::vector<int>& wires) {
  Layer layer;
  for (int w : wires) layer.push_back(gates::pauli_x(w));
  return layer;
}

void add_if_nonempty(Circuit& c, Layer layer) {
  if (!layer.empty()) c.add_layer(std::move(layer));
}

// Appends U_S on wires [0, n); threshold mode kicks back on wire n.
void add_us(Circuit& c, const ParityRestrictedSet& set, UsMode mode) {
  const int n = set.n();
  const auto wires = wire_range(0, n);
  if (mode == UsMode::kDirect) {
    c.add_gate(gates::phase_oracle(set.membership(), wires, "U_S"));
    return;
  }
  for (auto& g : gates::exact_phase_gate(n, set.slice_weight(), wires, n)) c.add_gate(std::move(g));
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

double grid_gamma1(int n, double set_size) {
  return std::ldexp(set_size * set_size, -(2 * n - 2));
}

int compute_m_from_gamma(double gamma1) {
  if (!(gamma1 > 0.0) || gamma1 >= 0.5) {
    throw std::invalid_argument("compute_m needs 0 < gamma1 < 1/2, got " + std::to_string(gamma1));
  }
  const double x = -std::log(2.0) / (2.0 * std::log1p(-2.0 * gamma1));
  return std::max(1, static_cast<int>(std::floor(x + 0.5)));
}

int compute_m(int n, double set_size) { return compute_m_from_gamma(grid_gamma1(n, set_size)); }

Circuit build_reflection(const ParityRestrictedSet& set, UsMode mode) {
  const int n = set.n();
  if (mode == UsMode::kThresholdCompiled && set.form() != ParityRestrictedSet::Form::kHammingSlice) {
    throw std::invalid_argument("threshold-compiled U_S requires a Hamming slice");
  }
  const bool kickback = mode == UsMode::kThresholdCompiled;
  Circuit c(n + (kickback ? 1 : 0), "reflection");
  c.params() = {{"n", n}, {"set", set.to_text()}, {"us_mode", kickback ? "threshold" : "direct"}};
  const auto column = wire_range(0, n);
  if (kickback) {
    c.add_layer({gates::pauli_x(n)});
    c.add_layer({gates::hadamard(n)});
  }
  c.add_layer(hadamard_layer(column));
  add_us(c, set, mode);
  c.add_layer(hadamard_layer(column));
  c.add_layer(x_layer(column));
  c.add_gate(GateInstance{PhasePredicateGate{BitPredicate::all_ones(n)}, column, "CZ[" + std::to_string(n) + "]"});
  c.add_layer(x_layer(column));
  c.add_layer(hadamard_layer(column));
  add_us(c, set, mode);
  c.add_layer(hadamard_layer(column));
  if (kickback) {
    c.add_layer({gates::hadamard(n)});
    c.add_layer({gates::pauli_x(n)});
  }
  return c;
}

void GridParams::validate() const {
  if (n < 1) throw std::invalid_argument("grid needs n >= 1");
  if (m < 1) throw std::invalid_argument("grid needs m >= 1");
  if (set.n() != n) throw std::invalid_argument("set width does not match n");
}

Circuit build_grid_nekomata(const GridParams& params, UsMode mode) {
  params.validate();
  const int n = params.n;
  const int m = params.m;
  Circuit c(params.qubit_count(mode), "grid");
  c.params() = {{"n", n},
                {"m", m},
                {"set", params.set.to_text()},
                {"us_mode", mode == UsMode::kDirect ? "direct" : "threshold"}};

  std::vector<int> non_target;
  for (int col = 1; col <= m; ++col) {
    for (int r = 0; r < n; ++r) non_target.push_back(params.grid_wire(col, r));
  }
  c.add_layer(x_layer(non_target));

  const Circuit reflection = build_reflection(params.set, mode);
  for (int col = 1; col <= m; ++col) {
    std::vector<int> map;
    for (int r = 0; r < n; ++r) map.push_back(params.grid_wire(col, r));
    if (mode == UsMode::kThresholdCompiled) map.push_back(n * (m + 1) + col - 1);
    c.merge(reflection, map, 1);
  }

  Layer toffolis;
  for (int r = 0; r < n; ++r) {
    std::vector<int> controls;
    for (int col = 1; col <= m; ++col) controls.push_back(params.grid_wire(col, r));
    toffolis.push_back(gates::toffoli(controls, params.grid_wire(0, r)));
  }
  c.add_layer(std::move(toffolis));
  return c;
}

Circuit build_cat_state(int n) {
  if (n < 1) throw std::invalid_argument("cat state needs n >= 1");
  Circuit c(n, "cat-state");
  c.params() = {{"n", n}};
  c.add_gate(gates::hadamard(0));
  for (int i = 0; i + 1 < n; ++i) c.add_gate(gates::cnot(i, i + 1));
  return c;
}

Circuit build_fanout_catlike(int n) {
  if (n < 1) throw std::invalid_argument("fanout catlike needs n >= 1");
  Circuit c(n, "fanout-catlike");
  c.params() = {{"n", n}};
  if (n > 1) c.add_gate(gates::fanout_gate(0, wire_range(1, n - 1)));
  return c;
}

Circuit build_nekomata_to_parity(const Circuit& preparer, const std::vector<int>& targets) {
  const auto n = static_cast<int>(targets.size());
  const int m = preparer.qubit_count();
  if (n < 1) throw std::invalid_argument("nekomata-to-parity needs at least one target");
  for (int t : targets) {
    if (t < 0 || t >= m) throw std::invalid_argument("target wire outside the preparer");
  }
  Circuit c(1 + n + m, "fig2-parity");
  c.params() = {{"n", n}, {"preparer", preparer.construction()}, {"preparer_qubits", m}, {"targets", targets}};
  const auto anc = wire_range(1 + n, m);
  const Circuit inverse = preparer.inverse();

  Layer cz;
  for (int i = 0; i < n; ++i) cz.push_back(gates::cz(1 + i, 1 + n + targets[static_cast<std::size_t>(i)]));

  c.append(preparer, anc);
  c.add_layer(cz);
  c.append(inverse, anc);
  c.add_gate(gates::or_gate(anc, 0));
  c.append(preparer, anc);
  c.add_layer(cz);
  c.append(inverse, anc);
  return c;
}

Circuit build_cat_to_parity(const Circuit& catlike, const std::vector<int>& cat_wires) {
  const auto n = static_cast<int>(cat_wires.size());
  const int q = catlike.qubit_count();
  if (n < 1 || cat_wires.front() != 0) throw std::invalid_argument("cat wires must start with wire 0");
  std::vector<int> sorted = cat_wires;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.back() >= q) {
    throw std::invalid_argument("cat wires must be distinct catlike wires");
  }
  Circuit c(n + q, "cat-parity");
  c.params() = {{"n", n}, {"catlike", catlike.construction()}, {"catlike_qubits", q}, {"cat_wires", cat_wires}};
  std::vector<int> map{0};
  for (int w = 1; w < q; ++w) map.push_back(n + w);

  Layer cz;
  for (int i = 0; i < n; ++i) cz.push_back(gates::cz(1 + i, map[static_cast<std::size_t>(cat_wires[static_cast<std::size_t>(i)])]));

  c.add_gate(gates::hadamard(0));
  c.append(catlike, map);
  c.add_layer(cz);
  c.append(catlike.inverse(), map);
  c.add_gate(gates::hadamard(0));
  return c;
}

Circuit build_cat_to_parity(const Circuit& catlike) {
  return build_cat_to_parity(catlike, wire_range(0, catlike.qubit_count()));
}

Circuit conjugate_by_hadamards(const Circuit& circuit, const std::vector<int>& wires) {
  Circuit c(circuit.qubit_count(), circuit.construction() + "/H-conjugated");
  c.params() = circuit.params();
  add_if_nonempty(c, hadamard_layer(wires));
  c.append(circuit);
  add_if_nonempty(c, hadamard_layer(wires));
  return c;
}

Circuit conjugate_by_hadamards(const Circuit& circuit) {
  return conjugate_by_hadamards(circuit, wire_range(0, circuit.qubit_count()));
}

Circuit build_encoded_mod_sum(int p, int n) {
  if (!gates::is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (n < 1) throw std::invalid_argument("encoded mod sum needs n >= 1");
  const ModpLayout layout{p, n};
  Circuit c(layout.qubit_count(), "encoded-mod-sum");
  c.params() = {{"p", p}, {"n", n}};

  // Ladder step ell: MOD_{n,p,ell} from the k-th wires of the x blocks into
  // counter wire (k, ell), for every k in parallel.
  auto ladder = [&] {
    for (int ell = 0; ell < p; ++ell) {
      Layer layer;
      for (int k = 0; k < p; ++k) {
        std::vector<int> controls;
        for (int j = 1; j <= n; ++j) controls.push_back(layout.block_wire(j, k));
        layer.push_back(gates::mod_gate(n, p, ell, controls, layout.counter_wire(k, ell)));
      }
      c.add_layer(std::move(layer));
    }
  };

  ladder();
  const auto b_block = wire_range(0, p);
  for (int k = 1; k < p; ++k) {
    for (int v = 1; v < p; ++v) {
      c.add_gate(gates::controlled_u_sigma_power(p, (k * v) % p, layout.counter_wire(k, v), b_block));
    }
  }
  ladder();
  return c;
}

Circuit build_modp_fanout(int p, int n) {
  const Circuit sum = build_encoded_mod_sum(p, n);
  const ModpLayout layout{p, n};
  Circuit c(layout.qubit_count(), "modp-fanout");
  c.params() = {{"p", p}, {"n", n}};

  c.add_gate(gates::cnot(0, 1));
  Layer prep{gates::pauli_x(0)};
  for (int j = 1; j <= n; ++j) prep.push_back(gates::pauli_x(layout.block_wire(j, 0)));
  c.add_layer(std::move(prep));

  Layer q_layer, q_dagger_layer;
  for (int j = 0; j <= n; ++j) {
    GateInstance q = gates::q_tilde_gate(p, wire_range(layout.block_wire(j, 0), p));
    q_dagger_layer.push_back(q.adjoint());
    q_layer.push_back(std::move(q));
  }
  c.add_layer(std::move(q_layer));
  c.append(sum);
  c.add_layer(std::move(q_dagger_layer));
  return c;
}

ModpCatlike build_modp_catlike(int p, int n) {
  ModpCatlike out{build_modp_fanout(p, n), {}};
  const ModpLayout layout{p, n};
  Layer undo;
  for (int j = 0; j <= n; ++j) {
    undo.push_back(gates::pauli_x(layout.block_wire(j, 0)));
    out.cat_wires.push_back(layout.block_wire(j, 0));
    out.cat_wires.push_back(layout.block_wire(j, 1));
  }
  out.circuit.add_layer(std::move(undo));
  out.circuit.set_construction("modp-catlike");
  return out;
}

Circuit build_subs_parity(const ParityRestrictedSet& set, int c) {
  const int n = set.n();
  const F2Basis basis = subs_complement_basis(set, c);
  const std::vector<Word> shifts = span_enumerate(basis);
  const auto blocks = static_cast<int>(shifts.size());
  const int out = n;
  auto block_wire = [&](int b, int i) { return n + 1 + b * n + i; };
  auto flag_wire = [&](int b) { return n + 1 + blocks * n + b; };

  Circuit circuit(n + 1 + blocks * n + blocks, "subs-parity");
  circuit.params() = {{"n", n}, {"c", c}, {"set", set.to_text()}, {"blocks", blocks}};

  Circuit half(circuit.qubit_count());
  for (int b = 0; b < blocks; ++b) {
    Layer copies;
    for (int i = 0; i < n; ++i) copies.push_back(gates::cnot(i, block_wire(b, i)));
    half.add_layer(std::move(copies));
  }
  Layer shift_layer;
  for (int b = 0; b < blocks; ++b) {
    for (int i = 0; i < n; ++i) {
      if (bit_at(shifts[static_cast<std::size_t>(b)], n, i)) shift_layer.push_back(gates::pauli_x(block_wire(b, i)));
    }
  }
  add_if_nonempty(half, std::move(shift_layer));
  Layer oracles;
  const BitPredicate membership = set.membership();
  for (int b = 0; b < blocks; ++b) {
    oracles.push_back(gates::flag_oracle(membership, wire_range(block_wire(b, 0), n), flag_wire(b), "U_S^flag"));
  }
  half.add_layer(std::move(oracles));

  std::vector<int> flags;
  for (int b = 0; b < blocks; ++b) flags.push_back(flag_wire(b));
  circuit.append(half);
  circuit.add_gate(gates::or_gate(flags, out));
  circuit.append(half.inverse());
  return circuit;
}

ParityRestrictedSet block_code_set(int k, double epsilon) {
  if (k < 2) throw std::invalid_argument("block code set needs k >= 2");
  if (!(epsilon > 0.0) || epsilon >= 1.0) throw std::invalid_argument("epsilon must lie in (0, 1)");
  const int h = std::clamp(static_cast<int>(std::floor((1.0 - epsilon) * k)), 0, k - 2);
  if (h > 20) throw std::invalid_argument("block code set limited to 2^20 members");
  std::vector<Word> members;
  const int ones = k - h - 1;
  for (Word y = 0; y < (Word{1} << h); ++y) {
    const Word body = (y << ones) | low_mask(ones);
    const Word q = static_cast<Word>((popcount(y) + ones) & 1);
    members.push_back((body << 1) | q);
  }
  return ParityRestrictedSet::explicit_list(k, std::move(members));
}

int toffoli_tree_levels(int n, int arity) {
  if (arity < 2 && n > 1) throw std::invalid_argument("tree nodes need arity >= 2");
  int levels = 1;
  int width = n;
  while (width > arity) {
    width = (width + arity - 1) / arity;
    ++levels;
  }
  return levels;
}

Circuit build_toffoli_from_small_us(const SetProvider& provider, double epsilon, int n) {
  if (n < 1) throw std::invalid_argument("Toffoli tree needs n >= 1");
  if (!(epsilon > 0.0) || epsilon >= 1.0) throw std::invalid_argument("epsilon must lie in (0, 1)");
  const ParityRestrictedSet set = provider(n);
  const int k = set.n();
  if (set.size_as_double() > std::exp2((1.0 - epsilon) * k)) {
    throw std::invalid_argument("|S_k| exceeds 2^((1 - epsilon) k)");
  }
  const Restriction restriction = restrict_fixing_indices(set);
  if (!set.contains(restriction.element)) throw std::logic_error("restriction element not in S");
  std::vector<bool> fixed(static_cast<std::size_t>(k), false);
  for (int i : restriction.indices) fixed[static_cast<std::size_t>(i)] = true;
  std::vector<int> free_positions;
  for (int i = 0; i < k; ++i) {
    if (!fixed[static_cast<std::size_t>(i)]) free_positions.push_back(i);
  }
  const auto arity = static_cast<int>(free_positions.size());
  if (arity < 1 || (arity < 2 && n > 1)) {
    throw std::invalid_argument("restriction leaves fewer than two free indices");
  }
  const int levels = toffoli_tree_levels(n, arity);
  if (levels > static_cast<int>(std::ceil(1.0 / epsilon)) + 1) {
    throw std::invalid_argument("tree depth exceeds ceil(1/epsilon) + 1");
  }
  const Word s = restriction.element;

  struct Node {
    std::vector<int> wires;  // k set positions in order
    int output;
    std::vector<int> dressed;  // input wires X-dressed around the oracle
  };
  int next_wire = n + 1;
  std::vector<int> presets;
  std::vector<std::vector<Node>> tree;
  std::vector<int> inputs = wire_range(0, n);
  for (int level = 0; level < levels; ++level) {
    const bool last = level + 1 == levels;
    std::vector<Node> nodes;
    std::vector<int> outputs;
    for (std::size_t start = 0; start < inputs.size(); start += static_cast<std::size_t>(arity)) {
      Node node;
      node.wires.assign(static_cast<std::size_t>(k), -1);
      std::size_t next_input = start;
      for (int pos = 0; pos < k; ++pos) {
        const bool bit = bit_at(s, k, pos) != 0;
        if (!fixed[static_cast<std::size_t>(pos)] && next_input < inputs.size() &&
            next_input < start + static_cast<std::size_t>(arity)) {
          const int w = inputs[next_input++];
          node.wires[static_cast<std::size_t>(pos)] = w;
          if (!bit) node.dressed.push_back(w);
        } else {
          const int w = next_wire++;
          node.wires[static_cast<std::size_t>(pos)] = w;
          if (bit) presets.push_back(w);
        }
      }
      node.output = last ? n : next_wire++;
      outputs.push_back(node.output);
      nodes.push_back(std::move(node));
    }
    if (last && nodes.size() != 1) throw std::logic_error("tree root is not unique");
    tree.push_back(std::move(nodes));
    inputs = std::move(outputs);
  }

  Circuit c(next_wire, "toffoli-tree");
  c.params() = {{"n", n}, {"epsilon", epsilon}, {"k", k}, {"set", set.to_text()},
                {"arity", arity}, {"levels", levels}, {"fixed", restriction.indices}};
  const BitPredicate membership = set.membership();
  auto apply_level = [&](const std::vector<Node>& nodes) {
    std::vector<int> dressed;
    Layer oracles;
    for (const Node& node : nodes) {
      dressed = concat(std::move(dressed), node.dressed);
      oracles.push_back(gates::flag_oracle(membership, node.wires, node.output, "U_S^flag"));
    }
    add_if_nonempty(c, x_layer(dressed));
    c.add_layer(std::move(oracles));
    add_if_nonempty(c, x_layer(dressed));
  };
  add_if_nonempty(c, x_layer(presets));
  for (const auto& nodes : tree) apply_level(nodes);
  for (int level = levels - 2; level >= 0; --level) apply_level(tree[static_cast<std::size_t>(level)]);
  add_if_nonempty(c, x_layer(presets));
  return c;
}

}  // namespace neko
