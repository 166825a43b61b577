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

#include "neko/bits.hpp"

#include <charconv>
#include <cstdlib>

namespace neko {

Word parse_bits(std::string_view text) {
  if (text.size() > 64) {
    throw std::invalid_argument("bitstring longer than 64 characters: " + std::string(text));
  }
  Word value = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("not a bitstring: '" + std::string(text) + "'");
    }
    value = (value << 1) | static_cast<Word>(c - '0');
  }
  return value;
}

std::string format_bits(Word value, int width) {
  std::string out(static_cast<std::size_t>(width), '0');
  for (int i = 0; i < width; ++i) {
    if (bit_at(value, width, i)) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

int dense_qubit_budget() {
  constexpr int kDefault = 22;
  const char* env = std::getenv("NEKO_BUDGET_QUBITS");
  if (env == nullptr || *env == '\0') return kDefault;
  int value = 0;
  std::string_view text(env);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1 || value > 40) {
    throw std::invalid_argument("NEKO_BUDGET_QUBITS must be an integer in [1, 40]");
  }
  return value;
}

void require_budget(int qubits, std::string_view what) {
  const int budget = dense_qubit_budget();
  if (qubits > budget) {
    throw BudgetExceeded(std::string(what) + " needs " + std::to_string(qubits) +
                         " qubits, budget is " + std::to_string(budget));
  }
}

}  // namespace neko
