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

#include "neko/circuit.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace neko {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool is_permutation_vector(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  for (int p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= perm.size() || seen[static_cast<std::size_t>(p)]) {
      return false;
    }
    seen[static_cast<std::size_t>(p)] = 1;
  }
  return true;
}

}  // namespace

void GateInstance::validate() const {
  std::vector<int> sorted = wires;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("gate '" + label + "' uses a wire twice");
  }
  if (!sorted.empty() && sorted.front() < 0) {
    throw std::invalid_argument("gate '" + label + "' has a negative wire index");
  }
  const auto count = static_cast<int>(wires.size());
  std::visit(
      overloaded{
          [&](const SingleQubitGate&) {
            if (count != 1) throw std::invalid_argument("single-qubit gate needs one wire");
          },
          [&](const DenseGate& g) {
            if (count > 12 || g.matrix.rows() != (Eigen::Index{1} << count) ||
                g.matrix.cols() != g.matrix.rows()) {
              throw std::invalid_argument("dense gate '" + label + "' does not match its wires");
            }
          },
          [&](const PhasePredicateGate& g) {
            if (g.predicate.arity() != count) {
              throw std::invalid_argument("phase predicate arity mismatch in '" + label + "'");
            }
          },
          [&](const FlipPredicateGate& g) {
            if (g.predicate.arity() + 1 != count) {
              throw std::invalid_argument("flip predicate arity mismatch in '" + label + "'");
            }
          },
          [&](const FanoutGate&) {
            if (count < 1) throw std::invalid_argument("fanout needs a source wire");
          },
          [&](const PermutationGate& g) {
            if (g.control_count < 0 ||
                g.control_count + static_cast<int>(g.perm.size()) != count) {
              throw std::invalid_argument("permutation gate '" + label + "' wire count mismatch");
            }
            if (!is_permutation_vector(g.perm)) {
              throw std::invalid_argument("permutation gate '" + label + "' is not a bijection");
            }
          },
      },
      kind);
}

GateInstance GateInstance::adjoint() const {
  GateInstance out = *this;
  std::visit(overloaded{
                 [](SingleQubitGate& g) { g.matrix = g.matrix.adjoint().eval(); },
                 [](DenseGate& g) { g.matrix = g.matrix.adjoint().eval(); },
                 [](PhasePredicateGate&) {},
                 [](FlipPredicateGate&) {},
                 [](FanoutGate&) {},
                 [](PermutationGate& g) {
                   std::vector<int> inv(g.perm.size());
                   for (std::size_t i = 0; i < g.perm.size(); ++i) {
                     inv[static_cast<std::size_t>(g.perm[i])] = static_cast<int>(i);
                   }
                   g.perm = std::move(inv);
                 },
             },
             out.kind);
  const bool self_adjoint = std::visit(overloaded{
                                           [](const SingleQubitGate& g) { return g.matrix == g.matrix.adjoint(); },
                                           [](const DenseGate& g) { return g.matrix == g.matrix.adjoint(); },
                                           [](const PermutationGate& g) {
                                             for (std::size_t i = 0; i < g.perm.size(); ++i) {
                                               if (g.perm[static_cast<std::size_t>(g.perm[i])] != static_cast<int>(i)) return false;
                                             }
                                             return true;
                                           },
                                           [](const auto&) { return true; },
                                       },
                                       kind);
  if (!self_adjoint) {
    out.label = label.ends_with("^dg") ? label.substr(0, label.size() - 3) : label + "^dg";
  }
  return out;
}

std::string GateInstance::kind_name() const {
  return std::visit(overloaded{
                        [](const SingleQubitGate&) { return std::string("single_qubit"); },
                        [](const DenseGate&) { return std::string("dense"); },
                        [](const PhasePredicateGate&) { return std::string("phase_predicate"); },
                        [](const FlipPredicateGate&) { return std::string("flip_predicate"); },
                        [](const FanoutGate&) { return std::string("fanout"); },
                        [](const PermutationGate&) { return std::string("wire_permutation"); },
                    },
                    kind);
}

Circuit::Circuit(int qubit_count, std::string construction)
    : qubit_count_(qubit_count), construction_(std::move(construction)) {
  if (qubit_count < 0) throw std::invalid_argument("qubit count must be non-negative");
}

void Circuit::check_layer(const Layer& layer) const {
  std::vector<char> used(static_cast<std::size_t>(qubit_count_), 0);
  for (const GateInstance& g : layer) {
    g.validate();
    for (int w : g.wires) {
      if (w >= qubit_count_) {
        throw std::invalid_argument("gate '" + g.label + "' wire " + std::to_string(w) +
                                    " out of range for " + std::to_string(qubit_count_) +
                                    " qubits");
      }
      if (used[static_cast<std::size_t>(w)]) {
        throw std::invalid_argument("layer gates overlap on wire " + std::to_string(w));
      }
      used[static_cast<std::size_t>(w)] = 1;
    }
  }
}

void Circuit::add_layer(Layer layer) {
  check_layer(layer);
  layers_.push_back(std::move(layer));
}

void Circuit::add_gate(GateInstance gate) { add_layer(Layer{std::move(gate)}); }

void Circuit::merge(const Circuit& fragment, std::span<const int> wire_map,
                    std::size_t start_layer) {
  if (wire_map.size() != static_cast<std::size_t>(fragment.qubit_count())) {
    throw std::invalid_argument("wire map size does not match fragment qubit count");
  }
  for (int w : wire_map) {
    if (w < 0 || w >= qubit_count_) throw std::invalid_argument("wire map target out of range");
  }
  if (layers_.size() < start_layer + fragment.layers_.size()) {
    layers_.resize(start_layer + fragment.layers_.size());
  }
  for (std::size_t i = 0; i < fragment.layers_.size(); ++i) {
    Layer& host = layers_[start_layer + i];
    Layer candidate = host;
    for (GateInstance g : fragment.layers_[i]) {
      for (int& w : g.wires) w = wire_map[static_cast<std::size_t>(w)];
      candidate.push_back(std::move(g));
    }
    check_layer(candidate);
    host = std::move(candidate);
  }
}

void Circuit::append(const Circuit& fragment, std::span<const int> wire_map) {
  merge(fragment, wire_map, layers_.size());
}

void Circuit::append(const Circuit& fragment) {
  const std::vector<int> map = wire_range(0, fragment.qubit_count());
  append(fragment, map);
}

Circuit Circuit::inverse() const {
  Circuit out(qubit_count_, construction_.empty() ? std::string{} : construction_ + "^dg");
  out.params_ = params_;
  out.layers_.reserve(layers_.size());
  for (auto it = layers_.rbegin(); it != layers_.rend(); ++it) {
    Layer layer;
    layer.reserve(it->size());
    for (const GateInstance& g : *it) layer.push_back(g.adjoint());
    out.layers_.push_back(std::move(layer));
  }
  return out;
}

int Circuit::depth() const {
  return static_cast<int>(std::count_if(layers_.begin(), layers_.end(), [](const Layer& layer) {
    return std::any_of(layer.begin(), layer.end(),
                       [](const GateInstance& g) { return g.is_multi_qubit(); });
  }));
}

int Circuit::size() const {
  int total = 0;
  for (const Layer& layer : layers_) {
    total += static_cast<int>(std::count_if(
        layer.begin(), layer.end(), [](const GateInstance& g) { return g.is_multi_qubit(); }));
  }
  return total;
}

void Circuit::validate() const {
  for (const Layer& layer : layers_) check_layer(layer);
}

std::size_t Circuit::gate_count() const {
  std::size_t total = 0;
  for (const Layer& layer : layers_) total += layer.size();
  return total;
}

std::vector<int> wire_range(int offset, int count) {
  std::vector<int> out(static_cast<std::size_t>(count));
  std::iota(out.begin(), out.end(), offset);
  return out;
}

}  // namespace neko
