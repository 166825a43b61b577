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

#include "neko/statevector.hpp"

namespace neko {

/// Permutation matrix of a reversible map on q-bit basis indices.
DenseOperator permutation_matrix(int qubits, const std::function<std::uint64_t(std::uint64_t)>& map);

/// Parity_n on wires (b, x_1..x_n): |b, x> -> |b xor x_1 xor ... xor x_n, x>.
DenseOperator ideal_parity(int n);

/// Fanout_n on wires (b, x_1..x_n): |b, x> -> |b, x_1 xor b, ..., x_n xor b>.
DenseOperator ideal_fanout(int n);

DenseOperator hadamard_all(int qubits);

DenseOperator kron(const DenseOperator& a, const DenseOperator& b);

/// op (x) |0^ancillas>: columns embedded with trailing zero ancillas.
DenseOperator embed_with_zero_ancillas(const DenseOperator& op, int ancillas);

}  // namespace neko
