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

#include "neko/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "neko/random.hpp"

namespace neko {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_qubit(const StateVector& state, int qubit) {
  if (qubit < 0 || qubit >= state.qubit_count()) {
    throw std::out_of_range("qubit " + std::to_string(qubit) + " out of range for " +
                            std::to_string(state.qubit_count()) + " qubits");
  }
}

std::uint64_t mask_of_all(const StateVector& state, std::span<const int> qubits) {
  std::uint64_t mask = 0;
  for (int q : qubits) {
    check_qubit(state, q);
    const std::uint64_t m = state.mask_of(q);
    if (mask & m) throw std::invalid_argument("qubit " + std::to_string(q) + " listed twice");
    mask |= m;
  }
  return mask;
}

Word gather(std::uint64_t index, std::span<const std::uint64_t> masks) {
  Word pattern = 0;
  for (std::uint64_t m : masks) pattern = (pattern << 1) | ((index & m) ? 1u : 0u);
  return pattern;
}

std::vector<std::uint64_t> masks_of(const StateVector& state, std::span<const int> qubits) {
  std::vector<std::uint64_t> masks;
  masks.reserve(qubits.size());
  for (int q : qubits) masks.push_back(state.mask_of(q));
  return masks;
}

// Truth table indexed by Hamming weight for weight-based predicates.
std::vector<char> weight_table(const BitPredicate& pred) {
  std::vector<char> table(static_cast<std::size_t>(pred.arity()) + 1);
  for (int w = 0; w <= pred.arity(); ++w) table[static_cast<std::size_t>(w)] = pred.on_weight(w);
  return table;
}

bool is_unitary(const Eigen::MatrixXcd& u, double tol) {
  const auto n = u.rows();
  return ((u.adjoint() * u) - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() <= tol;
}

bool eval_on_bits(const BitPredicate& pred, const BitVector& bits, std::span<const int> wires) {
  if (pred.weight_based()) {
    int weight = 0;
    for (int w : wires) weight += bits[static_cast<std::size_t>(w)];
    return pred.on_weight(weight);
  }
  Word pattern = 0;
  for (int w : wires) pattern = (pattern << 1) | bits[static_cast<std::size_t>(w)];
  return pred(pattern);
}

// Unique non-negligible row of column `col`, with its entry.
std::pair<Eigen::Index, Complex> monomial_entry(const Eigen::MatrixXcd& u, Eigen::Index col,
                                                const std::string& label) {
  Eigen::Index row = -1;
  for (Eigen::Index r = 0; r < u.rows(); ++r) {
    if (std::abs(u(r, col)) > 1e-12) {
      if (row >= 0) {
        throw std::invalid_argument("gate '" + label + "' maps a basis state to a superposition");
      }
      row = r;
    }
  }
  if (row < 0) throw std::invalid_argument("gate '" + label + "' has a zero column");
  return {row, u(row, col)};
}

}  // namespace

StateVector::StateVector(int qubit_count) : qubit_count_(qubit_count) {
  if (qubit_count < 0 || qubit_count > 30) {
    throw std::invalid_argument("statevector qubit count must lie in [0, 30]");
  }
  amps_.assign(std::size_t{1} << qubit_count, Complex{0.0, 0.0});
  amps_[0] = 1.0;
}

StateVector StateVector::basis_index(int qubit_count, std::uint64_t index) {
  StateVector s(qubit_count);
  if (index >= s.dimension()) throw std::out_of_range("basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

StateVector StateVector::from_amplitudes(int qubit_count, std::vector<Complex> amplitudes) {
  StateVector s(qubit_count);
  if (amplitudes.size() != s.amps_.size()) {
    throw std::invalid_argument("amplitude count must equal 2^qubit_count");
  }
  s.amps_ = std::move(amplitudes);
  if (std::abs(s.norm() - 1.0) > 1e-9) throw std::invalid_argument("amplitudes are not normalized");
  return s;
}

double StateVector::norm() const {
  double total = 0.0;
  for (const Complex& a : amps_) total += std::norm(a);
  return std::sqrt(total);
}

StateVector StateVector::tensor(const StateVector& other) const {
  StateVector out(qubit_count_ + other.qubit_count_);
  const std::uint64_t inner = other.dimension();
  for (std::uint64_t i = 0; i < dimension(); ++i) {
    for (std::uint64_t j = 0; j < inner; ++j) out.amps_[i * inner + j] = amps_[i] * other.amps_[j];
  }
  return out;
}

StateVector basis_state(int qubit_count, std::string_view bits) {
  if (static_cast<int>(bits.size()) != qubit_count) {
    throw std::invalid_argument("bitstring length " + std::to_string(bits.size()) +
                                " does not match qubit count " + std::to_string(qubit_count));
  }
  return StateVector::basis_index(qubit_count, parse_bits(bits));
}

StateVector basis_state(int qubit_count, const BitVector& bits) {
  if (static_cast<int>(bits.size()) != qubit_count) {
    throw std::invalid_argument("bit vector length does not match qubit count");
  }
  std::uint64_t index = 0;
  for (auto b : bits) index = (index << 1) | (b ? 1u : 0u);
  return StateVector::basis_index(qubit_count, index);
}

void apply_single_qubit(StateVector& state, int qubit, const Mat2& u) {
  check_qubit(state, qubit);
  if (!is_unitary(u, 1e-10)) throw std::invalid_argument("single-qubit matrix is not unitary");
  const std::uint64_t m = state.mask_of(qubit);
  const std::uint64_t dim = state.dimension();
  auto amps = state.amplitudes();
  const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
  for (std::uint64_t block = 0; block < dim; block += 2 * m) {
    for (std::uint64_t i = block; i < block + m; ++i) {
      const Complex a0 = amps[i];
      const Complex a1 = amps[i | m];
      amps[i] = u00 * a0 + u01 * a1;
      amps[i | m] = u10 * a0 + u11 * a1;
    }
  }
}

void apply_dense(StateVector& state, std::span<const int> qubits, const DenseOperator& u) {
  mask_of_all(state, qubits);  // validates the wires
  const auto k = static_cast<int>(qubits.size());
  if (u.rows() != (Eigen::Index{1} << k) || u.cols() != u.rows()) {
    throw std::invalid_argument("dense block size does not match qubit count");
  }
  if (!is_unitary(u, 1e-10)) throw std::invalid_argument("dense block is not unitary");
  const auto local_dim = static_cast<std::size_t>(u.rows());
  std::vector<std::uint64_t> offsets(local_dim, 0);
  const auto masks = masks_of(state, qubits);
  for (std::size_t l = 0; l < local_dim; ++l) {
    for (int b = 0; b < k; ++b) {
      if (l & (std::size_t{1} << (k - 1 - b))) offsets[l] |= masks[static_cast<std::size_t>(b)];
    }
  }
  // Enumerate bases with every block bit clear by spreading a counter around
  // the block bits, lowest first.
  std::vector<std::uint64_t> sorted(masks.begin(), masks.end());
  std::sort(sorted.begin(), sorted.end());
  const std::uint64_t groups = state.dimension() >> k;
  std::vector<Complex> in(local_dim), out(local_dim), flat(local_dim * local_dim);
  for (std::size_t r = 0; r < local_dim; ++r) {
    for (std::size_t c = 0; c < local_dim; ++c) {
      flat[r * local_dim + c] = u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  auto amps = state.amplitudes();
  for (std::uint64_t g = 0; g < groups; ++g) {
    std::uint64_t base = g;
    for (std::uint64_t m : sorted) base = ((base & ~(m - 1)) << 1) | (base & (m - 1));
    for (std::size_t l = 0; l < local_dim; ++l) in[l] = amps[base | offsets[l]];
    for (std::size_t r = 0; r < local_dim; ++r) {
      Complex acc = 0.0;
      for (std::size_t c = 0; c < local_dim; ++c) {
        acc += flat[r * local_dim + c] * in[c];
      }
      out[r] = acc;
    }
    for (std::size_t l = 0; l < local_dim; ++l) amps[base | offsets[l]] = out[l];
  }
}

void apply_phase_predicate(StateVector& state, std::span<const int> qubits, const BitPredicate& pred) {
  if (pred.arity() != static_cast<int>(qubits.size())) {
    throw std::invalid_argument("phase predicate arity " + std::to_string(pred.arity()) +
                                " does not match " + std::to_string(qubits.size()) + " qubits");
  }
  const std::uint64_t all = mask_of_all(state, qubits);
  auto amps = state.amplitudes();
  if (pred.weight_based()) {
    const auto table = weight_table(pred);
    for (std::uint64_t i = 0; i < state.dimension(); ++i) {
      if (table[static_cast<std::size_t>(std::popcount(i & all))]) amps[i] = -amps[i];
    }
    return;
  }
  const auto masks = masks_of(state, qubits);
  for (std::uint64_t i = 0; i < state.dimension(); ++i) {
    if (pred(gather(i, masks))) amps[i] = -amps[i];
  }
}

void apply_flip_predicate(StateVector& state, std::span<const int> controls, int target,
                          const BitPredicate& pred) {
  if (pred.arity() != static_cast<int>(controls.size())) {
    throw std::invalid_argument("flip predicate arity " + std::to_string(pred.arity()) +
                                " does not match " + std::to_string(controls.size()) + " controls");
  }
  check_qubit(state, target);
  const std::uint64_t all = mask_of_all(state, controls);
  const std::uint64_t t = state.mask_of(target);
  if (all & t) throw std::invalid_argument("flip target is also a control");
  auto amps = state.amplitudes();
  if (pred.weight_based()) {
    const auto table = weight_table(pred);
    for (std::uint64_t i = 0; i < state.dimension(); ++i) {
      if ((i & t) == 0 && table[static_cast<std::size_t>(std::popcount(i & all))]) {
        std::swap(amps[i], amps[i | t]);
      }
    }
    return;
  }
  const auto masks = masks_of(state, controls);
  for (std::uint64_t i = 0; i < state.dimension(); ++i) {
    if ((i & t) == 0 && pred(gather(i, masks))) std::swap(amps[i], amps[i | t]);
  }
}

void apply_fanout(StateVector& state, int source, std::span<const int> targets) {
  check_qubit(state, source);
  const std::uint64_t tmask = mask_of_all(state, targets);
  const std::uint64_t s = state.mask_of(source);
  if (tmask & s) throw std::invalid_argument("fanout source is also a target");
  if (tmask == 0) return;
  auto amps = state.amplitudes();
  for (std::uint64_t i = 0; i < state.dimension(); ++i) {
    const std::uint64_t j = i ^ tmask;
    if ((i & s) && i < j) std::swap(amps[i], amps[j]);
  }
}

void apply_wire_permutation(StateVector& state, std::span<const int> qubits,
                            std::span<const int> perm, std::span<const int> controls) {
  if (perm.size() != qubits.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<char> seen(perm.size(), 0);
  for (int p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= perm.size() || seen[static_cast<std::size_t>(p)]) {
      throw std::invalid_argument("wire permutation is not a bijection");
    }
    seen[static_cast<std::size_t>(p)] = 1;
  }
  const std::uint64_t block = mask_of_all(state, qubits);
  const std::uint64_t cmask = mask_of_all(state, controls);
  if (block & cmask) throw std::invalid_argument("permutation controls overlap the block");
  const auto masks = masks_of(state, qubits);
  // Each output bit i copies input bit perm[i].
  std::vector<std::pair<std::uint64_t, std::uint64_t>> moves;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const std::uint64_t from = masks[static_cast<std::size_t>(perm[i])];
    if (from != masks[i]) moves.emplace_back(from, masks[i]);
  }
  if (moves.empty()) return;
  auto amps = state.amplitudes();
  std::vector<Complex> out(amps.size());
  for (std::uint64_t x = 0; x < state.dimension(); ++x) {
    std::uint64_t y = x;
    if ((x & cmask) == cmask) {
      for (const auto& [from, to] : moves) y = (y & ~to) | ((x & from) ? to : 0);
    }
    out[y] = amps[x];
  }
  std::copy(out.begin(), out.end(), amps.begin());
}

void apply_gate(StateVector& state, const GateInstance& gate) {
  const std::span<const int> wires(gate.wires);
  std::visit(overloaded{
                 [&](const SingleQubitGate& g) { apply_single_qubit(state, wires[0], g.matrix); },
                 [&](const DenseGate& g) { apply_dense(state, wires, g.matrix); },
                 [&](const PhasePredicateGate& g) { apply_phase_predicate(state, wires, g.predicate); },
                 [&](const FlipPredicateGate& g) {
                   apply_flip_predicate(state, wires.first(wires.size() - 1), wires.back(), g.predicate);
                 },
                 [&](const FanoutGate&) { apply_fanout(state, wires[0], wires.subspan(1)); },
                 [&](const PermutationGate& g) {
                   const auto cc = static_cast<std::size_t>(g.control_count);
                   apply_wire_permutation(state, wires.subspan(cc), g.perm, wires.first(cc));
                 },
             },
             gate.kind);
}

void apply_circuit(StateVector& state, const Circuit& circuit) {
  if (circuit.qubit_count() != state.qubit_count()) {
    throw std::invalid_argument("circuit has " + std::to_string(circuit.qubit_count()) +
                                " qubits but the state has " + std::to_string(state.qubit_count()));
  }
  for (const Layer& layer : circuit.layers()) {
    for (const GateInstance& g : layer) apply_gate(state, g);
  }
}

StateVector run_circuit(const Circuit& circuit, const StateVector& initial) {
  StateVector state = initial;
  apply_circuit(state, circuit);
  return state;
}

double projection_norm(const StateVector& state, std::span<const int> qubits, std::string_view pattern) {
  if (pattern.size() != qubits.size()) {
    throw std::invalid_argument("pattern length does not match qubit count");
  }
  return projection_norm(state, qubits, parse_bits(pattern));
}

double projection_norm(const StateVector& state, std::span<const int> qubits, Word pattern) {
  const std::uint64_t all = mask_of_all(state, qubits);
  const auto masks = masks_of(state, qubits);
  std::uint64_t want = 0;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (bit_at(pattern, static_cast<int>(masks.size()), static_cast<int>(i))) want |= masks[i];
  }
  double total = 0.0;
  const auto amps = state.amplitudes();
  for (std::uint64_t i = 0; i < state.dimension(); ++i) {
    if ((i & all) == want) total += std::norm(amps[i]);
  }
  return std::sqrt(total);
}

std::vector<double> marginal_distribution(const StateVector& state, std::span<const int> qubits) {
  mask_of_all(state, qubits);
  if (qubits.size() > 30) throw std::invalid_argument("marginal over too many qubits");
  const auto masks = masks_of(state, qubits);
  std::vector<double> dist(std::size_t{1} << qubits.size(), 0.0);
  const auto amps = state.amplitudes();
  for (std::uint64_t i = 0; i < state.dimension(); ++i) dist[gather(i, masks)] += std::norm(amps[i]);
  return dist;
}

double l2_distance(const StateVector& a, const StateVector& b) {
  if (a.qubit_count() != b.qubit_count()) throw std::invalid_argument("state size mismatch");
  double total = 0.0;
  for (std::uint64_t i = 0; i < a.dimension(); ++i) total += std::norm(a[i] - b[i]);
  return std::sqrt(total);
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.qubit_count() != b.qubit_count()) throw std::invalid_argument("state size mismatch");
  Complex total{0.0, 0.0};
  for (std::uint64_t i = 0; i < a.dimension(); ++i) total += std::conj(a[i]) * b[i];
  return total;
}

DenseOperator circuit_to_matrix(const Circuit& circuit) { return circuit_to_isometry(circuit, 0); }

DenseOperator circuit_to_isometry(const Circuit& circuit, int ancilla_count) {
  const int q = circuit.qubit_count();
  if (q > 13) {
    throw BudgetExceeded("circuit_to_matrix supports at most 13 qubits, got " + std::to_string(q));
  }
  if (ancilla_count < 0 || ancilla_count > q) throw std::invalid_argument("bad ancilla count");
  const std::uint64_t dim = std::uint64_t{1} << q;
  const std::uint64_t cols = std::uint64_t{1} << (q - ancilla_count);
  DenseOperator out(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(cols));
  for (std::uint64_t j = 0; j < cols; ++j) {
    StateVector s = StateVector::basis_index(q, j << ancilla_count);
    apply_circuit(s, circuit);
    for (std::uint64_t i = 0; i < dim; ++i) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = s[i];
    }
  }
  return out;
}

double operator_distance(const DenseOperator& a, const DenseOperator& b, double relative_tolerance) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("operator_distance needs equal dimensions");
  }
  const DenseOperator diff = a - b;
  if (diff.cwiseAbs().maxCoeff() == 0.0) return 0.0;

  CounterRng rng(0x5eed);
  Eigen::VectorXcd v(diff.cols());
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(rng.normal(), rng.normal());
  v.normalize();

  double lambda = 0.0;
  constexpr int kMaxIterations = 100000;
  for (int it = 0; it < kMaxIterations; ++it) {
    const Eigen::VectorXcd w = diff * v;
    const double next = w.squaredNorm();
    v = diff.adjoint() * w;
    const double vn = v.norm();
    if (vn == 0.0) return 0.0;
    v /= vn;
    if (it > 0 && std::abs(next - lambda) <= relative_tolerance * next) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  // One extra Rayleigh step from the converged vector.
  lambda = std::max(lambda, (diff * v).squaredNorm());
  return std::sqrt(lambda);
}

double unitarity_defect(const DenseOperator& u) {
  const auto n = u.cols();
  return ((u.adjoint() * u) - DenseOperator::Identity(n, n)).cwiseAbs().maxCoeff();
}

BasisImage basis_image(const Circuit& circuit, BitVector bits) {
  if (static_cast<int>(bits.size()) != circuit.qubit_count()) {
    throw std::invalid_argument("input width does not match circuit qubit count");
  }
  Complex phase{1.0, 0.0};
  auto bit = [&](int w) -> std::uint8_t& { return bits[static_cast<std::size_t>(w)]; };
  for (const Layer& layer : circuit.layers()) {
    for (const GateInstance& gate : layer) {
      const std::span<const int> wires(gate.wires);
      std::visit(
          overloaded{
              [&](const SingleQubitGate& g) {
                const auto [row, entry] = monomial_entry(g.matrix, bit(wires[0]), gate.label);
                bit(wires[0]) = static_cast<std::uint8_t>(row);
                phase *= entry;
              },
              [&](const DenseGate& g) {
                Eigen::Index col = 0;
                for (int w : wires) col = (col << 1) | bit(w);
                const auto [row, entry] = monomial_entry(g.matrix, col, gate.label);
                const auto k = static_cast<int>(wires.size());
                for (int i = 0; i < k; ++i) {
                  bit(wires[static_cast<std::size_t>(i)]) =
                      static_cast<std::uint8_t>((row >> (k - 1 - i)) & 1);
                }
                phase *= entry;
              },
              [&](const PhasePredicateGate& g) {
                if (eval_on_bits(g.predicate, bits, wires)) phase = -phase;
              },
              [&](const FlipPredicateGate& g) {
                if (eval_on_bits(g.predicate, bits, wires.first(wires.size() - 1))) {
                  bit(wires.back()) ^= 1u;
                }
              },
              [&](const FanoutGate&) {
                if (bit(wires[0])) {
                  for (int w : wires.subspan(1)) bit(w) ^= 1u;
                }
              },
              [&](const PermutationGate& g) {
                const auto cc = static_cast<std::size_t>(g.control_count);
                for (int c : wires.first(cc)) {
                  if (!bit(c)) return;
                }
                const auto block = wires.subspan(cc);
                BitVector old;
                for (int w : block) old.push_back(bit(w));
                for (std::size_t i = 0; i < block.size(); ++i) {
                  bit(block[i]) = old[static_cast<std::size_t>(g.perm[i])];
                }
              },
          },
          gate.kind);
    }
  }
  return {std::move(bits), phase};
}

}  // namespace neko
