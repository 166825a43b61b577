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

#include <complex>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "neko/circuit.hpp"
#include "neko/predicate.hpp"

namespace neko {

/// Dense amplitude vector over 2^qubit_count basis states, big-endian:
/// qubit 0 is the most significant bit of the basis index.
class StateVector {
 public:
  explicit StateVector(int qubit_count);  // |0...0>

  static StateVector basis_index(int qubit_count, std::uint64_t index);

  /// Takes ownership of raw amplitudes; throws unless the length is 2^q and
  /// the norm is 1 within 1e-9.
  static StateVector from_amplitudes(int qubit_count, std::vector<Complex> amplitudes);

  int qubit_count() const { return qubit_count_; }
  std::uint64_t dimension() const { return std::uint64_t{1} << qubit_count_; }

  std::span<const Complex> amplitudes() const { return amps_; }
  std::span<Complex> amplitudes() { return amps_; }
  Complex amplitude(std::uint64_t index) const { return amps_[index]; }
  Complex& operator[](std::uint64_t index) { return amps_[index]; }
  const Complex& operator[](std::uint64_t index) const { return amps_[index]; }

  double norm() const;

  /// Bit of the basis index that carries `qubit`.
  std::uint64_t mask_of(int qubit) const {
    return std::uint64_t{1} << (qubit_count_ - 1 - qubit);
  }

  /// Tensor product this (x) other, this on the leading qubits.
  StateVector tensor(const StateVector& other) const;

 private:
  int qubit_count_;
  std::vector<Complex> amps_;
};

using Mat2 = Eigen::Matrix2cd;
using DenseOperator = Eigen::MatrixXcd;

StateVector basis_state(int qubit_count, std::string_view bits);
StateVector basis_state(int qubit_count, const BitVector& bits);

void apply_single_qubit(StateVector& state, int qubit, const Mat2& u);
void apply_dense(StateVector& state, std::span<const int> qubits, const DenseOperator& u);
void apply_phase_predicate(StateVector& state, std::span<const int> qubits, const BitPredicate& pred);
void apply_flip_predicate(StateVector& state, std::span<const int> controls, int target,
                          const BitPredicate& pred);
void apply_fanout(StateVector& state, int source, std::span<const int> targets);

/// new_bits[i] = old_bits[perm[i]] on `qubits`, optionally only where every
/// control wire is 1.
void apply_wire_permutation(StateVector& state, std::span<const int> qubits,
                            std::span<const int> perm, std::span<const int> controls = {});

void apply_gate(StateVector& state, const GateInstance& gate);
void apply_circuit(StateVector& state, const Circuit& circuit);
StateVector run_circuit(const Circuit& circuit, const StateVector& initial);

/// ||(|pattern><pattern| on qubits) (x) I |state>||_2.
double projection_norm(const StateVector& state, std::span<const int> qubits,
                       std::string_view pattern);
double projection_norm(const StateVector& state, std::span<const int> qubits, Word pattern);

/// Computational-basis distribution of the given qubits, indexed by the
/// packed pattern (first listed qubit most significant).
std::vector<double> marginal_distribution(const StateVector& state, std::span<const int> qubits);

double l2_distance(const StateVector& a, const StateVector& b);
Complex inner_product(const StateVector& a, const StateVector& b);

/// Matrix whose column j is run_circuit(circuit, |j>). Limited to 13 qubits.
DenseOperator circuit_to_matrix(const Circuit& circuit);

/// Columns restricted to basis inputs whose trailing `ancilla_count` qubits
/// are zero: a 2^q x 2^(q - ancilla_count) isometry.
DenseOperator circuit_to_isometry(const Circuit& circuit, int ancilla_count);

/// Spectral norm of (a - b) by power iteration on (a-b)^H (a-b), stopped when
/// the Rayleigh quotient changes by less than `relative_tolerance`.
double operator_distance(const DenseOperator& a, const DenseOperator& b,
                         double relative_tolerance = 1e-7);

/// max |U^H U - I| entrywise.
double unitarity_defect(const DenseOperator& u);

/// Image of a computational basis state under a circuit made of monomial
/// gates (every gate maps basis states to phased basis states). Throws
/// std::invalid_argument when some gate creates a superposition.
struct BasisImage {
  BitVector bits;
  Complex phase;
};
BasisImage basis_image(const Circuit& circuit, BitVector input);

}  // namespace neko
