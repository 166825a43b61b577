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
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "neko/predicate.hpp"

namespace neko {

using Complex = std::complex<double>;

/// 2x2 unitary on one wire.
struct SingleQubitGate {
  Eigen::Matrix2cd matrix;
};

/// Dense 2^k x 2^k unitary on k wires; the first wire is the most significant
/// bit of the local index.
struct DenseGate {
  Eigen::MatrixXcd matrix;
};

/// Diagonal gate |x> -> (-1)^pred(x) |x> over all of its wires.
struct PhasePredicateGate {
  BitPredicate predicate;
};

/// Wires are (controls..., target); target ^= pred(controls).
struct FlipPredicateGate {
  BitPredicate predicate;
};

/// Wires are (source, targets...); every target ^= source.
struct FanoutGate {};

/// Wires are (controls..., block...). When every control is 1 the block is
/// rewired so that new_block[i] = old_block[perm[i]].
struct PermutationGate {
  std::vector<int> perm;
  int control_count = 0;
};

using GateKind = std::variant<SingleQubitGate, DenseGate, PhasePredicateGate,
                              FlipPredicateGate, FanoutGate, PermutationGate>;

struct GateInstance {
  GateKind kind;
  std::vector<int> wires;
  std::string label;

  bool is_multi_qubit() const { return wires.size() > 1; }

  /// Throws std::invalid_argument when wires repeat or the payload's arity
  /// does not match the wire count.
  void validate() const;

  GateInstance adjoint() const;

  /// Stable lowercase name of the payload kind ("single_qubit", "dense", ...).
  std::string kind_name() const;
};

using Layer = std::vector<GateInstance>;

/// Layered circuit. Gates inside a layer act on pairwise-disjoint wires.
///
/// depth() counts layers holding at least one multi-qubit gate, so runs of
/// single-qubit layers are free; size() counts multi-qubit gates.
class Circuit {
 public:
  explicit Circuit(int qubit_count = 0, std::string construction = {});

  int qubit_count() const { return qubit_count_; }
  const std::vector<Layer>& layers() const { return layers_; }
  std::size_t layer_count() const { return layers_.size(); }
  bool empty() const { return layers_.empty(); }

  const std::string& construction() const { return construction_; }
  void set_construction(std::string label) { construction_ = std::move(label); }
  const nlohmann::json& params() const { return params_; }
  nlohmann::json& params() { return params_; }

  /// Appends a layer after validating gates and disjointness.
  void add_layer(Layer layer);

  /// Appends a single gate as its own layer.
  void add_gate(GateInstance gate);

  /// Places fragment layer i into layer start_layer + i of this circuit,
  /// remapping fragment wire w to wire_map[w]. Layers are created as needed;
  /// merging into an occupied wire throws.
  void merge(const Circuit& fragment, std::span<const int> wire_map, std::size_t start_layer);

  /// Appends the fragment's layers after the current last layer.
  void append(const Circuit& fragment, std::span<const int> wire_map);
  void append(const Circuit& fragment);

  Circuit inverse() const;

  int depth() const;
  int size() const;

  /// Re-checks every invariant; throws std::invalid_argument on violation.
  void validate() const;

  std::size_t gate_count() const;

 private:
  void check_layer(const Layer& layer) const;

  int qubit_count_;
  std::string construction_;
  nlohmann::json params_ = nlohmann::json::object();
  std::vector<Layer> layers_;
};

/// Identity wire map [offset, offset + count).
std::vector<int> wire_range(int offset, int count);

}  // namespace neko
