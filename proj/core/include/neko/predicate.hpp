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
#include <vector>

#include "neko/bits.hpp"

namespace neko {

/// Total Boolean function on `arity` bits. Inputs are packed with the first
/// listed wire as the most significant bit (see bits.hpp).
///
/// Hamming-weight predicates are evaluated from a popcount and never need the
/// packed pattern; explicit truth sets use a sorted member list.
class BitPredicate {
 public:
  enum class Kind {
    kExplicit,       // x in members
    kWeightAtLeast,  // |x| >= k
    kWeightEquals,   // |x| == k
    kWeightMod,      // |x| == residue (mod modulus)
    kAllOnes,
    kAllZeros,
    kNotAllZeros,
  };

  static BitPredicate explicit_set(int arity, std::vector<Word> members);
  static BitPredicate weight_at_least(int arity, int k);
  static BitPredicate weight_equals(int arity, int k);
  static BitPredicate weight_mod(int arity, int modulus, int residue);
  static BitPredicate all_ones(int arity);
  static BitPredicate all_zeros(int arity);
  static BitPredicate not_all_zeros(int arity);

  Kind kind() const { return kind_; }
  int arity() const { return arity_; }
  int k() const { return k_; }
  int modulus() const { return modulus_; }
  int residue() const { return k_; }
  const std::vector<Word>& members() const { return members_; }

  bool weight_based() const { return kind_ != Kind::kExplicit; }

  /// Value on an input of the given Hamming weight. Only valid when
  /// weight_based().
  bool on_weight(int weight) const;

  /// Value on a packed input pattern.
  bool operator()(Word pattern) const;

  std::string describe() const;

  friend bool operator==(const BitPredicate&, const BitPredicate&) = default;

 private:
  BitPredicate(Kind kind, int arity) : kind_(kind), arity_(arity) {}

  Kind kind_;
  int arity_;
  int k_ = 0;
  int modulus_ = 0;
  std::vector<Word> members_;
};

}  // namespace neko
