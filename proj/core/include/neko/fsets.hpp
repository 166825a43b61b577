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
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "neko/bits.hpp"
#include "neko/predicate.hpp"
#include "neko/random.hpp"

namespace neko {

using BigInt = boost::multiprecision::cpp_int;

/// Exact binomial coefficient C(n, k); zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

/// Nonempty S subset of {0,1}^n whose members all share one Hamming-weight
/// parity. Constructors validate and throw std::invalid_argument on empty,
/// duplicated, mixed-parity or out-of-range input.
class ParityRestrictedSet {
 public:
  enum class Form { kExplicitList, kHammingSlice, kSingleton };

  static ParityRestrictedSet explicit_list(int n, std::vector<Word> members);
  static ParityRestrictedSet from_strings(const std::vector<std::string>& members);
  static ParityRestrictedSet hamming_slice(int n, int weight);
  static ParityRestrictedSet singleton(int n, Word member);
  static ParityRestrictedSet singleton(std::string_view bits);

  int n() const { return n_; }
  Form form() const { return form_; }
  int parity() const { return parity_; }
  /// Weight of a Hamming slice; -1 for other forms.
  int slice_weight() const { return weight_; }

  BigInt size() const;
  double size_as_double() const;

  bool contains(Word x) const;

  /// Sorted member list. Slices are enumerated and must have n <= 24.
  std::vector<Word> members() const;

  /// Indicator of S over n bits.
  BitPredicate membership() const;

  /// Text form: "slice:n:w" for slices, otherwise comma-separated bitstrings.
  std::string to_text() const;

  friend bool operator==(const ParityRestrictedSet&, const ParityRestrictedSet&) = default;

 private:
  ParityRestrictedSet() = default;

  int n_ = 0;
  Form form_ = Form::kExplicitList;
  int parity_ = 0;
  int weight_ = -1;
  std::vector<Word> members_;
};

/// Parses the set text form: one bitstring per line (commas also accepted), or
/// "slice:n:w". Blank lines and '#' comments are ignored.
ParityRestrictedSet parse_set(std::string_view text);

/// Linearly independent vectors over F2, packed as in bits.hpp.
struct F2Basis {
  int n = 0;
  std::vector<Word> vectors;
};

/// Incremental XOR basis with one row per leading bit. The leading bit of a
/// row is its lowest string index, so elimination pivots on the lowest index
/// first.
class F2Echelon {
 public:
  explicit F2Echelon(int n);

  /// Inserts v; returns false when v is already in the span.
  bool insert(Word v);
  bool in_span(Word v) const;
  int rank() const { return rank_; }

 private:
  Word reduce(Word v) const;

  int n_;
  int rank_ = 0;
  std::vector<Word> rows_;  // rows_[b] has leading bit b, or 0
};

int f2_rank(int n, const std::vector<Word>& vectors);

/// Even-weight vectors t_1..t_d such that every x has the parity of S iff
/// x xor y is in S for some y in Span(t). S has its first bit flipped when its
/// parity is odd. Vectors are chosen greedily to cover the parity class, so S
/// and the t_i also span the even-weight subspace; d may exceed c - 1.
/// Requires 1 <= c <= 6, |S| >= 2^(n-c) and n <= 20; throws
/// std::invalid_argument when S spans fewer than n - c dimensions.
F2Basis subs_complement_basis(const ParityRestrictedSet& set, int c);

struct Restriction {
  Word element = 0;
  std::vector<int> indices;
};

/// Greedy index fixing: repeatedly split the current subset on its first
/// differing index and keep the smaller half (ties keep the half holding the
/// smallest string). The result's element is the unique member of S agreeing
/// with it on `indices`, and indices.size() <= log2 |S|.
Restriction restrict_fixing_indices(const ParityRestrictedSet& set);

/// All 2^d combinations of the basis in Gray-code order, starting at 0.
std::vector<Word> span_enumerate(const F2Basis& basis);

/// `size` distinct uniformly drawn strings of the given parity (n <= 24).
ParityRestrictedSet sample_parity_restricted_set(int n, std::uint64_t size, int parity, CounterRng& rng);

}  // namespace neko
