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

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "neko/circuit.hpp"

namespace neko {

/// Circuit document:
///   {"construction", "params", "qubits", "layers": [[{"kind", "wires", "label", "data"}]]}
/// Matrices are stored as [re, im] pairs in row-major order. Doubles are
/// written with round-trip precision, so parse(serialize(c)) reproduces c.
nlohmann::json circuit_to_json(const Circuit& circuit);
Circuit circuit_from_json(const nlohmann::json& doc);

nlohmann::json predicate_to_json(const BitPredicate& predicate);
BitPredicate predicate_from_json(const nlohmann::json& doc);

std::string serialize_circuit(const Circuit& circuit);
Circuit parse_circuit(std::string_view text);

/// Structural equality: same qubit count, construction, params and gates.
bool circuits_equal(const Circuit& a, const Circuit& b);

}  // namespace neko
