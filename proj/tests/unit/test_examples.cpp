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

// Small worked cases for the state-vector kernels and gate catalog.
#include <gtest/gtest.h>

#include "neko/constructions.hpp"
#include "neko/dense.hpp"
#include "neko/gates.hpp"
#include "neko/statevector.hpp"
#include "support/oracle.hpp"

using namespace neko;

namespace {

constexpr double kTol = 1e-10;
const double kHalf = 1.0 / std::sqrt(2.0);

bool flips(const GateInstance& g, std::string_view controls) {
  const int q = static_cast<int>(g.wires.size());
  StateVector s = basis_state(q, std::string(controls) + "0");
  apply_gate(s, g);
  return std::abs(s.amplitude(1 | (parse_bits(controls) << 1)) - Complex(1.0)) < kTol;
}

}  // namespace

TEST(Examples, BasisStates) {
  EXPECT_EQ(basis_state(2, "00").amplitudes()[0], Complex(1.0));
  EXPECT_EQ(basis_state(1, "1").amplitudes()[1], Complex(1.0));
  EXPECT_EQ(basis_state(3, "101").amplitudes()[5], Complex(1.0));
  EXPECT_THROW(basis_state(3, "10"), std::invalid_argument);
}

TEST(Examples, SingleQubitGates) {
  StateVector s(1);
  apply_single_qubit(s, 0, gates::hadamard_matrix());
  EXPECT_NEAR(std::abs(s.amplitude(0) - kHalf), 0.0, kTol);
  EXPECT_NEAR(std::abs(s.amplitude(1) - kHalf), 0.0, kTol);
  StateVector t(2);
  apply_single_qubit(t, 0, gates::pauli_x_matrix());
  EXPECT_EQ(t.amplitude(0b10), Complex(1.0));
  CounterRng rng(61);
  const auto psi = oracle::random_state(4, rng);
  StateVector u = StateVector::from_amplitudes(4, psi);
  apply_single_qubit(u, 2, gates::hadamard_matrix());
  apply_single_qubit(u, 2, gates::hadamard_matrix());
  EXPECT_LT(oracle::l2(oracle::Vec(u.amplitudes().begin(), u.amplitudes().end()), psi), 1e-12);
  Eigen::Matrix2cd bad;
  bad << 1.0, 1.0, 0.0, 1.0;
  EXPECT_THROW(apply_single_qubit(u, 0, bad), std::invalid_argument);
}

TEST(Examples, PhasePredicates) {
  StateVector bell(2);
  bell[0] = kHalf;
  bell[3] = kHalf;
  apply_phase_predicate(bell, std::vector<int>{0, 1}, BitPredicate::all_ones(2));
  EXPECT_NEAR(bell.amplitude(3).real(), -kHalf, kTol);
  EXPECT_NEAR(bell.amplitude(0).real(), kHalf, kTol);
  StateVector w = basis_state(2, "11");
  apply_phase_predicate(w, std::vector<int>{0, 1}, BitPredicate::weight_equals(2, 2));
  EXPECT_EQ(w.amplitude(3), Complex(-1.0));
  EXPECT_THROW(apply_phase_predicate(w, std::vector<int>{0}, BitPredicate::all_ones(2)), std::invalid_argument);
}

TEST(Examples, FlipPredicates) {
  const auto controls = wire_range(0, 3);
  EXPECT_TRUE(flips(gates::threshold_gate(3, 2, 3, controls), "110"));
  EXPECT_TRUE(flips(gates::threshold_gate(3, 2, 3, controls), "101"));
  EXPECT_FALSE(flips(gates::threshold_gate(3, 2, 3, controls), "100"));
  EXPECT_TRUE(flips(gates::threshold_gate(3, 0, 3, controls), "000"));
  EXPECT_FALSE(flips(gates::toffoli(wire_range(0, 2), 2), "10"));
  EXPECT_TRUE(flips(gates::mod_gate(4, 3, 0, wire_range(0, 4), 4), "1110"));
  EXPECT_FALSE(flips(gates::or_gate(controls, 3), "000"));
  EXPECT_TRUE(flips(gates::or_gate(controls, 3), "010"));
  StateVector s(3);
  EXPECT_THROW(apply_flip_predicate(s, std::vector<int>{0, 1}, 1, BitPredicate::all_ones(2)), std::invalid_argument);
}

TEST(Examples, ThresholdWithKEqualNIsToffoli) {
  for (int n = 1; n <= 5; ++n) {
    const auto a = oracle::local_matrix(gates::threshold_gate(n, n, n, wire_range(0, n)));
    const auto b = oracle::local_matrix(gates::toffoli(wire_range(0, n), n));
    EXPECT_EQ(a, b);
  }
}

TEST(Examples, ThresholdMonotoneInK) {
  for (int n = 1; n <= 10; ++n) {
    for (int k = 0; k < n; ++k) {
      const auto lo = BitPredicate::weight_at_least(n, k);
      const auto hi = BitPredicate::weight_at_least(n, k + 1);
      for (Word x = 0; x < (Word{1} << n); ++x) EXPECT_GE(lo(x), hi(x));
    }
  }
}

TEST(Examples, ModTwoOneIsParity) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(oracle::local_matrix(gates::mod_gate(n, 2, 1, wire_range(0, n), n)),
              oracle::local_matrix(gates::parity_gate(wire_range(0, n), n)));
  }
}

TEST(Examples, OrIsFlipThenAllZerosFlip) {
  for (int n = 1; n <= 6; ++n) {
    Circuit lhs(n + 1);
    lhs.add_gate(gates::or_gate(wire_range(0, n), n));
    Circuit rhs(n + 1);
    rhs.add_gate(gates::pauli_x(n));
    rhs.add_gate(gates::flag_oracle(BitPredicate::all_zeros(n), wire_range(0, n), n, "Z0"));
    EXPECT_LT((circuit_to_matrix(lhs) - circuit_to_matrix(rhs)).cwiseAbs().maxCoeff(), kTol);
  }
}

TEST(Examples, SlicePhaseMatchesPredicate) {
  Circuit c(5);
  c.add_gate(gates::pauli_x(4));
  c.add_gate(gates::hadamard(4));
  for (auto& g : gates::slice_us_gate(4, wire_range(0, 4), 4)) c.add_gate(std::move(g));
  c.add_gate(gates::hadamard(4));
  c.add_gate(gates::pauli_x(4));
  EXPECT_EQ(c.depth(), 2);
  const auto iso = circuit_to_isometry(c, 1);
  Circuit direct(4);
  direct.add_gate(gates::phase_oracle(BitPredicate::weight_equals(4, 2), wire_range(0, 4), "S"));
  EXPECT_LT((iso - embed_with_zero_ancillas(circuit_to_matrix(direct), 1)).cwiseAbs().maxCoeff(), kTol);
  EXPECT_NEAR(iso(parse_bits("11000"), parse_bits("1100")).real(), -1.0, kTol);
  EXPECT_NEAR(iso(parse_bits("11100"), parse_bits("1110")).real(), 1.0, kTol);
}

TEST(Examples, ExactPhaseCancelsTwoAbove) {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      Circuit c(n + 1);
      c.add_gate(gates::pauli_x(n));
      c.add_gate(gates::hadamard(n));
      for (auto& g : gates::exact_phase_gate(n, k, wire_range(0, n), n)) c.add_gate(std::move(g));
      c.add_gate(gates::hadamard(n));
      c.add_gate(gates::pauli_x(n));
      const auto iso = circuit_to_isometry(c, 1);
      for (Word x = 0; x < (Word{1} << n); ++x) {
        const double want = std::popcount(x) == k ? -1.0 : 1.0;
        EXPECT_NEAR(iso(static_cast<Eigen::Index>(x << 1), static_cast<Eigen::Index>(x)).real(), want, kTol);
      }
    }
  }
}

TEST(Examples, QTildeTwo) {
  const auto u = oracle::local_matrix(gates::q_tilde_gate(2, std::vector<int>{0, 1}));
  // E|0> = |10>, E|1> = |01>.
  EXPECT_NEAR(std::abs(u(0b10, 0b10) - kHalf), 0.0, kTol);
  EXPECT_NEAR(std::abs(u(0b01, 0b10) - kHalf), 0.0, kTol);
  EXPECT_LT((u.adjoint() * u - oracle::Mat::Identity(4, 4)).cwiseAbs().maxCoeff(), kTol);
}

TEST(Examples, WirePermutations) {
  for (int p : {2, 3, 5}) {
    for (int j = 0; j < p; ++j) {
      StateVector s(p);
      s[0] = 0.0;
      s[std::uint64_t{1} << (p - 1 - j)] = 1.0;
      StateVector t = s;
      apply_gate(t, gates::u_sigma_power(p, 1, wire_range(0, p)));
      const int down = (j + p - 1) % p;
      EXPECT_EQ(t.amplitude(std::uint64_t{1} << (p - 1 - down)), Complex(1.0));
      StateVector same = s;
      apply_gate(same, gates::u_sigma_power(p, p, wire_range(0, p)));
      EXPECT_EQ(same.amplitudes()[std::uint64_t{1} << (p - 1 - j)], Complex(1.0));
      for (int a = 0; a < p; ++a) {
        for (int b = 0; b < p; ++b) {
          StateVector ab = s;
          apply_gate(ab, gates::u_sigma_power(p, a, wire_range(0, p)));
          apply_gate(ab, gates::u_sigma_power(p, b, wire_range(0, p)));
          StateVector sum = s;
          apply_gate(sum, gates::u_sigma_power(p, a + b, wire_range(0, p)));
          EXPECT_LT(l2_distance(ab, sum), kTol);
        }
      }
    }
  }
  StateVector s = basis_state(3, "001");
  apply_wire_permutation(s, wire_range(0, 3), std::vector<int>{0, 1, 2});
  EXPECT_EQ(s.amplitude(1), Complex(1.0));
  EXPECT_THROW(apply_wire_permutation(s, wire_range(0, 3), std::vector<int>{0, 0, 2}), std::invalid_argument);
}

TEST(Examples, RunCircuitBell) {
  EXPECT_LT(l2_distance(run_circuit(Circuit(2), basis_state(2, "01")), basis_state(2, "01")), kTol);
  Circuit c(2);
  c.add_gate(gates::hadamard(0));
  c.add_gate(gates::cnot(0, 1));
  const auto s = run_circuit(c, StateVector(2));
  EXPECT_NEAR(s.amplitude(0).real(), kHalf, kTol);
  EXPECT_NEAR(s.amplitude(3).real(), kHalf, kTol);
  EXPECT_NEAR(projection_norm(s, std::vector<int>{0, 1}, "00"), kHalf, kTol);
  EXPECT_NEAR(projection_norm(basis_state(2, "10"), std::vector<int>{0, 1}, "11"), 0.0, kTol);
  EXPECT_THROW(projection_norm(s, std::vector<int>{0, 1}, "0"), std::invalid_argument);
}

TEST(Examples, ColumnProjectionForAllOnes) {
  const auto set = ParityRestrictedSet::singleton("1111");
  StateVector col = basis_state(4, "1111");
  apply_circuit(col, build_reflection(set));
  const double gamma1 = 1.0 / 64.0;
  EXPECT_NEAR(projection_norm(col, wire_range(0, 4), "1111"), 1.0 - 2.0 * gamma1, 1e-9);
}

TEST(Examples, SmallMatrices) {
  Circuit h(1);
  h.add_gate(gates::hadamard(0));
  EXPECT_LT((circuit_to_matrix(h) - oracle::hadamard_power(1)).cwiseAbs().maxCoeff(), kTol);
  Circuit par(3);
  par.add_gate(gates::parity_gate(std::vector<int>{1, 2}, 0));
  EXPECT_LT((circuit_to_matrix(par) - ideal_parity(2)).cwiseAbs().maxCoeff(), kTol);
  const oracle::Mat id = oracle::Mat::Identity(2, 2);
  EXPECT_NEAR(operator_distance(id, -id), 2.0, 1e-7);
  EXPECT_THROW(operator_distance(id, oracle::Mat::Identity(4, 4)), std::invalid_argument);
  EXPECT_THROW(circuit_to_matrix(Circuit(14)), BudgetExceeded);
}

TEST(Properties, PredicateGatesAreSelfInverse) {
  CounterRng rng(62);
  for (int trial = 0; trial < 40; ++trial) {
    const int q = static_cast<int>(rng.between(3, 8));
    const int k = static_cast<int>(rng.between(1, q - 1));
    const auto psi = StateVector::from_amplitudes(q, oracle::random_state(q, rng));
    const auto pred = BitPredicate::weight_mod(k, static_cast<int>(rng.between(2, 4)), 0);
    const auto wires = wire_range(q - k - 1, k);
    StateVector a = psi;
    apply_phase_predicate(a, wires, pred);
    apply_phase_predicate(a, wires, pred);
    EXPECT_LT(l2_distance(a, psi), 1e-12);
    StateVector b = psi;
    apply_flip_predicate(b, wires, q - 1, pred);
    EXPECT_NEAR(b.norm(), 1.0, 1e-12);
    // Control marginals are untouched by a flip.
    const auto before = marginal_distribution(psi, wires);
    const auto after = marginal_distribution(b, wires);
    for (std::size_t i = 0; i < before.size(); ++i) EXPECT_NEAR(before[i], after[i], 1e-12);
    apply_flip_predicate(b, wires, q - 1, pred);
    EXPECT_LT(l2_distance(b, psi), 1e-12);
  }
}

TEST(Properties, HadamardConjugationPreservesDistance) {
  CounterRng rng(63);
  for (int n = 1; n <= 4; ++n) {
    const auto h = hadamard_all(n + 1);
    // Perturb Parity_n by a random small unitary rotation.
    Circuit noisy(n + 1);
    noisy.add_gate(gates::parity_gate(wire_range(1, n), 0));
    const double angle = rng.uniform() * 0.3;
    Eigen::Matrix2cd r;
    r << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
    noisy.add_gate(gates::single_qubit(static_cast<int>(rng.below(static_cast<std::uint64_t>(n + 1))), r, "R"));
    const auto a = circuit_to_matrix(noisy);
    EXPECT_NEAR(operator_distance(h * a * h, ideal_fanout(n), 1e-12), operator_distance(a, ideal_parity(n), 1e-12), 1e-9);
  }
  for (int n = 1; n <= 6; ++n) {
    const auto h = hadamard_all(n + 1);
    EXPECT_LT((h * ideal_fanout(n) * h - ideal_parity(n)).cwiseAbs().maxCoeff(), kTol);
  }
}
