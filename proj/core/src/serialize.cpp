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

#include "neko/serialize.hpp"

#include <stdexcept>

namespace neko {
namespace {

using nlohmann::json;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

template <class Matrix>
json matrix_to_json(const Matrix& m) {
  json entries = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back({m(r, c).real(), m(r, c).imag()});
  }
  return {{"dim", m.rows()}, {"entries", std::move(entries)}};
}

Eigen::MatrixXcd matrix_from_json(const json& doc) {
  const auto dim = doc.at("dim").get<Eigen::Index>();
  const auto& entries = doc.at("entries");
  if (dim < 1 || static_cast<Eigen::Index>(entries.size()) != dim * dim) {
    throw std::invalid_argument("matrix entry count does not match dim");
  }
  Eigen::MatrixXcd m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      const auto& e = entries.at(static_cast<std::size_t>(r * dim + c));
      m(r, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return m;
}

const char* predicate_kind_name(BitPredicate::Kind kind) {
  switch (kind) {
    case BitPredicate::Kind::kExplicit: return "explicit";
    case BitPredicate::Kind::kWeightAtLeast: return "weight_at_least";
    case BitPredicate::Kind::kWeightEquals: return "weight_equals";
    case BitPredicate::Kind::kWeightMod: return "weight_mod";
    case BitPredicate::Kind::kAllOnes: return "all_ones";
    case BitPredicate::Kind::kAllZeros: return "all_zeros";
    case BitPredicate::Kind::kNotAllZeros: return "not_all_zeros";
  }
  throw std::logic_error("unknown predicate kind");
}

json gate_data(const GateInstance& g) {
  return std::visit(overloaded{
                        [](const SingleQubitGate& p) { return matrix_to_json(p.matrix); },
                        [](const DenseGate& p) { return matrix_to_json(p.matrix); },
                        [](const PhasePredicateGate& p) { return predicate_to_json(p.predicate); },
                        [](const FlipPredicateGate& p) { return predicate_to_json(p.predicate); },
                        [](const FanoutGate&) { return json::object(); },
                        [](const PermutationGate& p) {
                          return json{{"perm", p.perm}, {"control_count", p.control_count}};
                        },
                    },
                    g.kind);
}

GateKind gate_kind_from_json(const std::string& kind, const json& data) {
  if (kind == "single_qubit") {
    const Eigen::MatrixXcd m = matrix_from_json(data);
    if (m.rows() != 2) throw std::invalid_argument("single_qubit gate needs a 2x2 matrix");
    return SingleQubitGate{Eigen::Matrix2cd(m)};
  }
  if (kind == "dense") return DenseGate{matrix_from_json(data)};
  if (kind == "phase_predicate") return PhasePredicateGate{predicate_from_json(data)};
  if (kind == "flip_predicate") return FlipPredicateGate{predicate_from_json(data)};
  if (kind == "fanout") return FanoutGate{};
  if (kind == "wire_permutation") {
    return PermutationGate{data.at("perm").get<std::vector<int>>(), data.at("control_count").get<int>()};
  }
  throw std::invalid_argument("unknown gate kind '" + kind + "'");
}

}  // namespace

json predicate_to_json(const BitPredicate& predicate) {
  json doc{{"kind", predicate_kind_name(predicate.kind())}, {"arity", predicate.arity()}};
  switch (predicate.kind()) {
    case BitPredicate::Kind::kExplicit: doc["members"] = predicate.members(); break;
    case BitPredicate::Kind::kWeightAtLeast:
    case BitPredicate::Kind::kWeightEquals: doc["k"] = predicate.k(); break;
    case BitPredicate::Kind::kWeightMod:
      doc["modulus"] = predicate.modulus();
      doc["residue"] = predicate.residue();
      break;
    default: break;
  }
  return doc;
}

BitPredicate predicate_from_json(const json& doc) {
  const auto kind = doc.at("kind").get<std::string>();
  const int arity = doc.at("arity").get<int>();
  if (kind == "explicit") return BitPredicate::explicit_set(arity, doc.at("members").get<std::vector<Word>>());
  if (kind == "weight_at_least") return BitPredicate::weight_at_least(arity, doc.at("k").get<int>());
  if (kind == "weight_equals") return BitPredicate::weight_equals(arity, doc.at("k").get<int>());
  if (kind == "weight_mod") {
    return BitPredicate::weight_mod(arity, doc.at("modulus").get<int>(), doc.at("residue").get<int>());
  }
  if (kind == "all_ones") return BitPredicate::all_ones(arity);
  if (kind == "all_zeros") return BitPredicate::all_zeros(arity);
  if (kind == "not_all_zeros") return BitPredicate::not_all_zeros(arity);
  throw std::invalid_argument("unknown predicate kind '" + kind + "'");
}

json circuit_to_json(const Circuit& circuit) {
  json layers = json::array();
  for (const Layer& layer : circuit.layers()) {
    json gates = json::array();
    for (const GateInstance& g : layer) {
      gates.push_back({{"kind", g.kind_name()}, {"wires", g.wires}, {"label", g.label}, {"data", gate_data(g)}});
    }
    layers.push_back(std::move(gates));
  }
  return {{"construction", circuit.construction()},
          {"params", circuit.params()},
          {"qubits", circuit.qubit_count()},
          {"layers", std::move(layers)}};
}

Circuit circuit_from_json(const json& doc) {
  try {
    Circuit circuit(doc.at("qubits").get<int>(), doc.value("construction", std::string{}));
    circuit.params() = doc.value("params", json::object());
    for (const auto& layer_doc : doc.at("layers")) {
      Layer layer;
      for (const auto& g : layer_doc) {
        layer.push_back(GateInstance{gate_kind_from_json(g.at("kind").get<std::string>(), g.value("data", json::object())),
                                     g.at("wires").get<std::vector<int>>(), g.value("label", std::string{})});
      }
      circuit.add_layer(std::move(layer));
    }
    return circuit;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed circuit document: ") + e.what());
  }
}

std::string serialize_circuit(const Circuit& circuit) { return circuit_to_json(circuit).dump(1); }

Circuit parse_circuit(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("circuit file is not JSON: ") + e.what());
  }
  return circuit_from_json(doc);
}

bool circuits_equal(const Circuit& a, const Circuit& b) { return circuit_to_json(a) == circuit_to_json(b); }

}  // namespace neko
