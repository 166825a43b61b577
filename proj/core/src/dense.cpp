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

#include "neko/dense.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace neko {

DenseOperator permutation_matrix(int qubits, const std::function<std::uint64_t(std::uint64_t)>& map) {
  if (qubits < 0 || qubits > 13) throw BudgetExceeded("permutation_matrix supports at most 13 qubits");
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << qubits);
  DenseOperator out = DenseOperator::Zero(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    const auto i = static_cast<Eigen::Index>(map(static_cast<std::uint64_t>(j)));
    if (i < 0 || i >= dim || out.row(i).cwiseAbs().sum() != 0.0) {
      throw std::invalid_argument("map is not a permutation of basis states");
    }
    out(i, j) = 1.0;
  }
  return out;
}

DenseOperator ideal_parity(int n) {
  const int q = n + 1;
  const std::uint64_t b = std::uint64_t{1} << n;
  const std::uint64_t xmask = b - 1;
  return permutation_matrix(q, [=](std::uint64_t idx) {
    return (std::popcount(idx & xmask) & 1) ? idx ^ b : idx;
  });
}

DenseOperator ideal_fanout(int n) {
  const int q = n + 1;
  const std::uint64_t b = std::uint64_t{1} << n;
  const std::uint64_t xmask = b - 1;
  return permutation_matrix(q, [=](std::uint64_t idx) { return (idx & b) ? idx ^ xmask : idx; });
}

DenseOperator hadamard_all(int qubits) {
  if (qubits < 0 || qubits > 13) throw BudgetExceeded("hadamard_all supports at most 13 qubits");
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << qubits);
  const double scale = std::pow(2.0, -0.5 * qubits);
  DenseOperator out(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      out(i, j) = (std::popcount(static_cast<std::uint64_t>(i & j)) & 1) ? -scale : scale;
    }
  }
  return out;
}

DenseOperator kron(const DenseOperator& a, const DenseOperator& b) {
  DenseOperator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DenseOperator embed_with_zero_ancillas(const DenseOperator& op, int ancillas) {
  DenseOperator zero_ket = DenseOperator::Zero(Eigen::Index{1} << ancillas, 1);
  zero_ket(0, 0) = 1.0;
  return kron(op, zero_ket);
}

}  // namespace neko
