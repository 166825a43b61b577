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

// Reference implementations used only by tests. They follow the textbook
// definitions directly (per-basis-state loops, explicit Kronecker products)
// and share no code with the library kernels they check.

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "neko/circuit.hpp"
#include "neko/random.hpp"

namespace oracle {

using Complex = std::complex<double>;
using Vec = std::vector<Complex>;
using Mat = Eigen::MatrixXcd;

inline bool naive_predicate(const neko::BitPredicate& p, std::uint64_t x) {
  const int arity = p.arity();
  int weight = 0;
  for (int i = 0; i < arity; ++i) weight += static_cast<int>((x >> i) & 1u);
  switch (p.kind()) {
    case neko::BitPredicate::Kind::kExplicit:
      return std::find(p.members().begin(), p.members().end(), x) != p.members().end();
    case neko::BitPredicate::Kind::kWeightAtLeast: return weight >= p.k();
    case neko::BitPredicate::Kind::kWeightEquals: return weight == p.k();
    case neko::BitPredicate::Kind::kWeightMod: return weight % p.modulus() == p.residue();
    case neko::BitPredicate::Kind::kAllOnes: return weight == arity;
    case neko::BitPredicate::Kind::kAllZeros: return weight == 0;
    case neko::BitPredicate::Kind::kNotAllZeros: return weight != 0;
  }
  return false;
}

// Local 2^k x 2^k matrix of a gate from its definition; wire 0 of the gate is
// the most significant local bit.
inline Mat local_matrix(const neko::GateInstance& g) {
  const int k = static_cast<int>(g.wires.size());
  const auto dim = Eigen::Index{1} << k;
  Mat m = Mat::Zero(dim, dim);
  auto permutation = [&](auto&& map) {
    for (Eigen::Index l = 0; l < dim; ++l) m(static_cast<Eigen::Index>(map(static_cast<std::uint64_t>(l))), l) = 1.0;
  };
  if (auto* p = std::get_if<neko::SingleQubitGate>(&g.kind)) return p->matrix;
  if (auto* p = std::get_if<neko::DenseGate>(&g.kind)) return p->matrix;
  if (auto* p = std::get_if<neko::PhasePredicateGate>(&g.kind)) {
    for (Eigen::Index l = 0; l < dim; ++l) m(l, l) = naive_predicate(p->predicate, static_cast<std::uint64_t>(l)) ? -1.0 : 1.0;
    return m;
  }
  if (auto* p = std::get_if<neko::FlipPredicateGate>(&g.kind)) {
    permutation([&](std::uint64_t l) { return l ^ (naive_predicate(p->predicate, l >> 1) ? 1u : 0u); });
    return m;
  }
  if (std::holds_alternative<neko::FanoutGate>(g.kind)) {
    const std::uint64_t src = std::uint64_t{1} << (k - 1);
    permutation([&](std::uint64_t l) { return (l & src) ? (l ^ (src - 1)) : l; });
    return m;
  }
  const auto& perm = std::get<neko::PermutationGate>(g.kind);
  const int c = perm.control_count;
  const int b = k - c;
  permutation([&](std::uint64_t l) {
    const std::uint64_t controls = l >> b;
    if (controls != (std::uint64_t{1} << c) - 1) return l;
    std::uint64_t out = controls << b;
    for (int i = 0; i < b; ++i) {
      const int src = perm.perm[static_cast<std::size_t>(i)];
      if ((l >> (b - 1 - src)) & 1u) out |= std::uint64_t{1} << (b - 1 - i);
    }
    return out;
  });
  return m;
}

inline Vec apply_gate(const neko::GateInstance& g, int q, const Vec& v) {
  const Mat m = local_matrix(g);
  const int k = static_cast<int>(g.wires.size());
  Vec out(v.size(), 0.0);
  for (std::uint64_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0.0) continue;
    std::uint64_t local = 0;
    std::uint64_t rest = i;
    for (int j = 0; j < k; ++j) {
      const int shift = q - 1 - g.wires[static_cast<std::size_t>(j)];
      local = (local << 1) | ((i >> shift) & 1u);
      rest &= ~(std::uint64_t{1} << shift);
    }
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      const Complex a = m(r, static_cast<Eigen::Index>(local));
      if (a == 0.0) continue;
      std::uint64_t target = rest;
      for (int j = 0; j < k; ++j) {
        if ((static_cast<std::uint64_t>(r) >> (k - 1 - j)) & 1u) target |= std::uint64_t{1} << (q - 1 - g.wires[static_cast<std::size_t>(j)]);
      }
      out[target] += a * v[i];
    }
  }
  return out;
}

inline Vec apply_circuit(const neko::Circuit& c, Vec v) {
  for (const auto& layer : c.layers()) {
    for (const auto& g : layer) v = apply_gate(g, c.qubit_count(), v);
  }
  return v;
}

inline Mat circuit_matrix(const neko::Circuit& c) {
  const std::uint64_t dim = std::uint64_t{1} << c.qubit_count();
  Mat m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::uint64_t j = 0; j < dim; ++j) {
    Vec e(dim, 0.0);
    e[j] = 1.0;
    const Vec col = apply_circuit(c, e);
    for (std::uint64_t i = 0; i < dim; ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = col[i];
  }
  return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

inline Mat hadamard_power(int n) {
  Mat h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  Mat out = Mat::Identity(1, 1);
  for (int i = 0; i < n; ++i) out = kron(out, h);
  return out;
}

/// Largest singular value through a full SVD.
inline double spectral_norm(const Mat& m) {
  return Eigen::JacobiSVD<Mat>(m).singularValues()(0);
}

inline double l2(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

inline double norm(const Vec& a) {
  double s = 0.0;
  for (const auto& x : a) s += std::norm(x);
  return std::sqrt(s);
}

inline Vec random_state(int q, neko::CounterRng& rng) {
  Vec v(std::size_t{1} << q);
  for (auto& x : v) x = Complex(rng.normal(), rng.normal());
  const double s = norm(v);
  for (auto& x : v) x /= s;
  return v;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace oracle
