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

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace neko {

/// Bitstrings of up to 64 bits are packed most-significant-first: character
/// i of an n-character string is bit (n - 1 - i) of the word. The same
/// convention maps qubit i of a q-qubit register to bit (q - 1 - i) of a basis
/// index, so "101" on three qubits is index 5.
using Word = std::uint64_t;

/// Unpacked bit vector for registers wider than a Word.
using BitVector = std::vector<std::uint8_t>;

/// Raised when an operation would exceed the dense-simulation budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Word parse_bits(std::string_view text);
std::string format_bits(Word value, int width);

inline int popcount(Word w) { return std::popcount(w); }

inline int bit_at(Word w, int width, int i) {
  return static_cast<int>((w >> (width - 1 - i)) & 1u);
}

inline Word single_bit(int width, int i) { return Word{1} << (width - 1 - i); }

inline Word low_mask(int width) {
  return width >= 64 ? ~Word{0} : (Word{1} << width) - 1;
}

/// Maximum qubit count for dense statevector work. Defaults to 22 and can be
/// overridden with the NEKO_BUDGET_QUBITS environment variable.
int dense_qubit_budget();

/// Throws BudgetExceeded naming `what` when `qubits` exceeds the budget.
void require_budget(int qubits, std::string_view what);

}  // namespace neko
