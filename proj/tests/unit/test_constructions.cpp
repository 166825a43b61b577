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

#include <cmath>

#include <gtest/gtest.h>

#include "neko/analysis.hpp"
#include "neko/constructions.hpp"
#include "neko/dense.hpp"
#include "neko/gates.hpp"
#include "support/oracle.hpp"

using namespace neko;

namespace {

constexpr double kTol = 1e-9;

// I - 2|psi><psi| with psi = H^n U_S H^n |0^n>, built entry by entry.
oracle::Mat reference_reflection(const ParityRestrictedSet& set) {
  const int n = set.n();
  const auto dim = Eigen::Index{1} << n;
  oracle::Mat us = oracle::Mat::Identity(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    if (set.contains(static_cast<Word>(x))) us(x, x) = -1.0;
  }
  const oracle::Mat h = oracle::hadamard_power(n);
  Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(dim);
  zero(0) = 1.0;
  const Eigen::VectorXcd psi = h * us * h * zero;
  return oracle::Mat::Identity(dim, dim) - 2.0 * psi * psi.adjoint();
}

BitVector bits_of(Word x, int width, int total) {
  BitVector out(static_cast<std::size_t>(total), 0);
  for (int i = 0; i < width; ++i) out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((x >> (width - 1 - i)) & 1u);
  return out;
}

double max_entry(const oracle::Mat& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(ComputeM, Examples) {
  EXPECT_EQ(compute_m(4, 1.0), 11);
  EXPECT_EQ(compute_m_from_gamma(1.0 / 16.0), 3);
  EXPECT_NEAR(grid_gamma1(4, 1.0), 1.0 / 64.0, 1e-15);
  EXPECT_EQ(compute_m_from_gamma(0.3), 1);
  EXPECT_THROW(compute_m_from_gamma(0.5), std::invalid_argument);
  EXPECT_THROW(compute_m_from_gamma(0.0), std::invalid_argument);
  EXPECT_THROW(compute_m(2, 2.0), std::invalid_argument);
}

TEST(Reflection, MatchesDefinition) {
  CounterRng rng(51);
  std::vector<ParityRestrictedSet> sets = {ParityRestrictedSet::singleton("11"), ParityRestrictedSet::hamming_slice(4, 2),
                                           ParityRestrictedSet::hamming_slice(5, 1)};
  for (int i = 0; i < 6; ++i) {
    const int n = static_cast<int>(rng.between(2, 8));
    sets.push_back(sample_parity_restricted_set(n, 1 + rng.below(std::uint64_t{1} << (n - 1)), static_cast<int>(rng.below(2)), rng));
  }
  for (const auto& set : sets) {
    const Circuit c = build_reflection(set);
    EXPECT_EQ(c.depth(), 3);
    const auto m = circuit_to_matrix(c);
    EXPECT_LT(max_entry(m - reference_reflection(set)), kTol) << set.to_text();
    EXPECT_LT(max_entry(m * m - oracle::Mat::Identity(m.rows(), m.cols())), kTol);
    // <0^n|psi_S> = 1 - |S| / 2^(n-1), so the (0,0) entry is 1 - 2 (1 - |S|/2^(n-1))^2.
    const double overlap = 1.0 - set.size_as_double() / std::ldexp(1.0, set.n() - 1);
    EXPECT_NEAR(m(0, 0).real(), 1.0 - 2.0 * overlap * overlap, kTol);
  }
}

TEST(Reflection, ThresholdCompiledSliceAgrees) {
  for (int n : {2, 4, 6}) {
    const auto set = ParityRestrictedSet::hamming_slice(n, n / 2);
    const Circuit c = build_reflection(set, UsMode::kThresholdCompiled);
    const auto iso = circuit_to_isometry(c, 1);
    EXPECT_LT(max_entry(iso - embed_with_zero_ancillas(reference_reflection(set), 1)), kTol);
  }
  EXPECT_THROW(build_reflection(ParityRestrictedSet::singleton("11"), UsMode::kThresholdCompiled), std::invalid_argument);
}

TEST(Grid, DepthAndSizeAudit) {
  for (int n = 2; n <= 9; ++n) {
    for (int m = 1; m <= 12; m += 3) {
      const GridParams params{n, ParityRestrictedSet::singleton(n, low_mask(n)), m};
      const Circuit c = build_grid_nekomata(params);
      EXPECT_EQ(c.depth(), 4);
      // Each non-target column carries U_S, C^nZ, U_S; each row one Toffoli.
      EXPECT_EQ(c.size(), 3 * m + n);
      EXPECT_EQ(c.qubit_count(), n * (m + 1));
      c.validate();
    }
  }
}

TEST(Grid, SimulationMatchesAnalysis) {
  struct Case {
    std::string set;
    int m;
  };
  for (const Case& k : {Case{"111", 3}, Case{"1111", 2}, Case{"slice:4:2", 2}, Case{"110,011", 3}}) {
    const auto set = parse_set(k.set);
    const GridParams params{set.n(), set, k.m};
    const StateVector out = run_circuit(build_grid_nekomata(params), StateVector(params.qubit_count(UsMode::kDirect)));
    const auto targets = params.target_wires();
    const auto dist = marginal_distribution(out, targets);
    const auto grid = grid_target_distribution(column_stats(set, true), k.m);
    EXPECT_NEAR(dist.front(), grid.p_zero, kTol) << k.set;
    EXPECT_NEAR(dist.back(), grid.p_one, kTol) << k.set;
    EXPECT_NEAR(1.0 - dist.front() - dist.back(), grid.p_mixed, kTol) << k.set;
    EXPECT_NEAR(nekomata_fidelity(out, targets), grid.fidelity, kTol) << k.set;
  }
}

TEST(Grid, ThresholdCompiledMatchesDirectOnTargets) {
  const auto set = ParityRestrictedSet::hamming_slice(4, 2);
  const GridParams params{4, set, 2};
  const auto direct = run_circuit(build_grid_nekomata(params), StateVector(params.qubit_count(UsMode::kDirect)));
  const Circuit compiled = build_grid_nekomata(params, UsMode::kThresholdCompiled);
  EXPECT_EQ(compiled.qubit_count(), 14);
  const auto out = run_circuit(compiled, StateVector(compiled.qubit_count()));
  const auto a = marginal_distribution(direct, params.target_wires());
  const auto b = marginal_distribution(out, params.target_wires());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], kTol);
  EXPECT_NEAR(projection_norm(out, std::vector<int>{12, 13}, "00"), 1.0, kTol);
}

TEST(Parity, ExactPreparerGivesParity) {
  for (int n = 1; n <= 5; ++n) {
    const Circuit c = build_nekomata_to_parity(build_cat_state(n), wire_range(0, n));
    EXPECT_EQ(c.qubit_count(), 2 * n + 1);
    const auto iso = circuit_to_isometry(c, n);
    EXPECT_LT(max_entry(iso - embed_with_zero_ancillas(ideal_parity(n), n)), kTol) << n;
    // All-zero data with b = 0 reads out 0 and leaves ancillas clean.
    const auto out = run_circuit(c, StateVector(c.qubit_count()));
    EXPECT_NEAR(out.amplitude(0).real(), 1.0, kTol);
  }
  EXPECT_THROW(build_nekomata_to_parity(build_cat_state(3), std::vector<int>{0, 5}), std::invalid_argument);
}

TEST(Parity, CatlikeFanoutGivesParity) {
  for (int n = 1; n <= 6; ++n) {
    const Circuit c = build_cat_to_parity(build_fanout_catlike(n));
    const auto iso = circuit_to_isometry(c, n - 1);
    EXPECT_LT(operator_distance(iso, embed_with_zero_ancillas(ideal_parity(n), n - 1)), kTol) << n;
  }
}

TEST(Parity, HadamardConjugationSwapsParityAndFanout) {
  for (int n = 1; n <= 4; ++n) {
    Circuit parity(n + 1);
    parity.add_gate(gates::parity_gate(wire_range(1, n), 0));
    const auto fan = circuit_to_matrix(conjugate_by_hadamards(parity));
    EXPECT_LT(max_entry(fan - ideal_fanout(n)), kTol);
    const auto twice = circuit_to_matrix(conjugate_by_hadamards(conjugate_by_hadamards(parity)));
    EXPECT_LT(max_entry(twice - ideal_parity(n)), kTol);
  }
}

TEST(CatStates, PrepareCatAndCatlike) {
  for (int n = 1; n <= 6; ++n) {
    const auto cat = run_circuit(build_cat_state(n), StateVector(n));
    EXPECT_NEAR(std::abs(cat.amplitude(0)), 1.0 / std::sqrt(2.0), kTol);
    EXPECT_NEAR(std::abs(cat.amplitude(low_mask(n))), 1.0 / std::sqrt(2.0), kTol);
    EXPECT_NEAR(nekomata_fidelity(cat, wire_range(0, n)), 1.0, kTol);
    StateVector in(n);
    in[0] = 0.6;
    in[std::uint64_t{1} << (n - 1)] = Complex(0.0, 0.8);
    const auto out = run_circuit(build_fanout_catlike(n), in);
    EXPECT_NEAR(std::abs(out.amplitude(0) - 0.6), 0.0, kTol);
    EXPECT_NEAR(std::abs(out.amplitude(low_mask(n)) - Complex(0.0, 0.8)), 0.0, kTol);
  }
}

TEST(Modp, EncodedModSumOnEncodedBasis) {
  for (auto [p, n] : {std::pair{2, 1}, std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 1}, std::pair{3, 2}, std::pair{5, 1}}) {
    const ModpLayout layout{p, n};
    const Circuit c = build_encoded_mod_sum(p, n);
    ASSERT_EQ(c.qubit_count(), layout.qubit_count());
    std::uint64_t total = 1;
    for (int i = 0; i <= n; ++i) total *= static_cast<std::uint64_t>(p);
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<int> digits(static_cast<std::size_t>(n + 1));
      std::uint64_t rest = code;
      for (int j = n; j >= 0; --j) {
        digits[static_cast<std::size_t>(j)] = static_cast<int>(rest % static_cast<std::uint64_t>(p));
        rest /= static_cast<std::uint64_t>(p);
      }
      BitVector in(static_cast<std::size_t>(layout.qubit_count()), 0);
      for (int j = 0; j <= n; ++j) in[static_cast<std::size_t>(layout.block_wire(j, digits[static_cast<std::size_t>(j)]))] = 1;
      int sum = 0;
      for (int j = 1; j <= n; ++j) sum += digits[static_cast<std::size_t>(j)];
      BitVector want = in;
      want[static_cast<std::size_t>(layout.block_wire(0, digits[0]))] = 0;
      want[static_cast<std::size_t>(layout.block_wire(0, (((digits[0] - sum) % p) + p) % p))] = 1;
      const auto img = basis_image(c, in);
      EXPECT_EQ(img.bits, want) << "p=" << p << " n=" << n << " code=" << code;
      EXPECT_NEAR(std::abs(img.phase - Complex(1.0)), 0.0, kTol);
    }
  }
  EXPECT_THROW(build_encoded_mod_sum(4, 1), std::invalid_argument);
}

TEST(Modp, FanoutPreparesCatLikeState) {
  const std::vector<std::pair<Complex, Complex>> amps = {
      {1.0, 0.0}, {0.0, 1.0}, {1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)}, {1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0)}};
  for (auto [p, n] : {std::pair{2, 4}, std::pair{3, 2}}) {
    const ModpCatlike cl = build_modp_catlike(p, n);
    const int q = cl.circuit.qubit_count();
    EXPECT_EQ(q, (ModpLayout{p, n}.qubit_count()));
    EXPECT_EQ(cl.cat_wires.size(), static_cast<std::size_t>(2 * (n + 1)));
    std::uint64_t ones = 0;
    for (int w : cl.cat_wires) ones |= std::uint64_t{1} << (q - 1 - w);
    for (auto [a, b] : amps) {
      StateVector in(q);
      in[0] = a;
      in[std::uint64_t{1} << (q - 1)] = b;
      const auto out = run_circuit(cl.circuit, in);
      StateVector want(q);
      want[0] = a;
      want[ones] += b;
      EXPECT_LT(l2_distance(out, want), kTol) << "p=" << p << " n=" << n;
    }
  }
}

TEST(Subs, CircuitComputesParityClassIndicator) {
  CounterRng rng(52);
  std::vector<std::pair<ParityRestrictedSet, int>> cases;
  {
    std::vector<Word> even;
    for (Word x = 0; x < 64; ++x) {
      if (std::popcount(x) % 2 == 0) even.push_back(x);
    }
    cases.emplace_back(ParityRestrictedSet::explicit_list(6, even), 1);
  }
  for (int i = 0; i < 8; ++i) {
    const int n = static_cast<int>(rng.between(3, 8));
    const auto lo = std::uint64_t{1} << (n - 2);
    const auto size = lo + rng.below((std::uint64_t{1} << (n - 1)) - lo + 1);
    cases.emplace_back(sample_parity_restricted_set(n, size, static_cast<int>(rng.below(2)), rng), 2);
  }
  for (const auto& [set, c] : cases) {
    const Circuit circuit = build_subs_parity(set, c);
    const int n = set.n();
    for (Word x = 0; x < (Word{1} << n); ++x) {
      const auto img = basis_image(circuit, bits_of(x, n, circuit.qubit_count()));
      BitVector want = bits_of(x, n, circuit.qubit_count());
      want[static_cast<std::size_t>(n)] = static_cast<std::uint8_t>(std::popcount(x) % 2 == set.parity());
      EXPECT_EQ(img.bits, want) << set.to_text() << " x=" << format_bits(x, n);
    }
  }
}

TEST(ToffoliTree, BlockCodeSets) {
  const auto s = block_code_set(8, 0.5);
  EXPECT_EQ(s.n(), 8);
  EXPECT_EQ(s.size(), 16);
  for (Word x : s.members()) EXPECT_EQ(std::popcount(x) % 2, s.parity());
  EXPECT_LE(s.size_as_double(), std::pow(2.0, 0.5 * 8));
}

TEST(ToffoliTree, ComputesAnd) {
  const SetProvider provider = [](int k) { return block_code_set(k, 0.5); };
  for (int n = 2; n <= 8; ++n) {
    const Circuit c = build_toffoli_from_small_us(provider, 0.5, n);
    for (Word x = 0; x < (Word{1} << n); ++x) {
      for (int b = 0; b < 2; ++b) {
        BitVector in = bits_of(x, n, c.qubit_count());
        in[static_cast<std::size_t>(n)] = static_cast<std::uint8_t>(b);
        BitVector want = in;
        want[static_cast<std::size_t>(n)] ^= static_cast<std::uint8_t>(x == low_mask(n));
        EXPECT_EQ(basis_image(c, in).bits, want) << "n=" << n << " x=" << format_bits(x, n);
      }
    }
  }
  EXPECT_EQ(toffoli_tree_levels(4, 4), 1);
  EXPECT_EQ(toffoli_tree_levels(16, 4), 2);
  EXPECT_EQ(toffoli_tree_levels(17, 4), 3);
}

TEST(Builders, OutputsAreValidUnitaries) {
  std::vector<Circuit> circuits = {
      build_reflection(ParityRestrictedSet::hamming_slice(4, 2)),
      build_grid_nekomata(GridParams{2, ParityRestrictedSet::singleton("11"), 3}),
      build_cat_to_parity(build_fanout_catlike(3)),
      build_nekomata_to_parity(build_cat_state(2), wire_range(0, 2)),
      build_subs_parity(ParityRestrictedSet::hamming_slice(3, 1), 2),
  };
  for (const auto& c : circuits) {
    c.validate();
    if (c.qubit_count() <= 10) EXPECT_LT(unitarity_defect(circuit_to_matrix(c)), kTol) << c.construction();
  }
}
