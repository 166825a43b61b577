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

#include "neko/fsets.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace neko {
namespace {

int parity_of(Word w) { return popcount(w) & 1; }

void check_width(int n) {
  if (n < 1 || n > 64) throw std::invalid_argument("explicit sets need 1 <= n <= 64");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument(std::string("bad ") + what + " in set text: '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

BigInt binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

ParityRestrictedSet ParityRestrictedSet::explicit_list(int n, std::vector<Word> members) {
  check_width(n);
  if (members.empty()) throw std::invalid_argument("parity-restricted set must be nonempty");
  for (Word m : members) {
    if (m & ~low_mask(n)) throw std::invalid_argument("set member wider than n=" + std::to_string(n));
  }
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw std::invalid_argument("explicit set lists a member twice");
  }
  const int parity = parity_of(members.front());
  for (Word m : members) {
    if (parity_of(m) != parity) {
      throw std::invalid_argument("set mixes parities: " + format_bits(members.front(), n) + " and " +
                                  format_bits(m, n));
    }
  }
  ParityRestrictedSet s;
  s.n_ = n;
  s.form_ = members.size() == 1 ? Form::kSingleton : Form::kExplicitList;
  s.parity_ = parity;
  s.members_ = std::move(members);
  return s;
}

ParityRestrictedSet ParityRestrictedSet::from_strings(const std::vector<std::string>& members) {
  if (members.empty()) throw std::invalid_argument("parity-restricted set must be nonempty");
  const auto n = static_cast<int>(members.front().size());
  std::vector<Word> words;
  words.reserve(members.size());
  for (const auto& m : members) {
    if (static_cast<int>(m.size()) != n) throw std::invalid_argument("set members differ in length");
    words.push_back(parse_bits(m));
  }
  auto s = explicit_list(n, std::move(words));
  if (s.members_.size() > 1) s.form_ = Form::kExplicitList;
  return s;
}

ParityRestrictedSet ParityRestrictedSet::hamming_slice(int n, int weight) {
  if (n < 1 || n > 1024) throw std::invalid_argument("slice needs 1 <= n <= 1024");
  if (weight < 0 || weight > n) throw std::invalid_argument("slice weight must lie in [0, n]");
  ParityRestrictedSet s;
  s.n_ = n;
  s.form_ = Form::kHammingSlice;
  s.parity_ = weight & 1;
  s.weight_ = weight;
  return s;
}

ParityRestrictedSet ParityRestrictedSet::singleton(int n, Word member) {
  auto s = explicit_list(n, {member});
  s.form_ = Form::kSingleton;
  return s;
}

ParityRestrictedSet ParityRestrictedSet::singleton(std::string_view bits) {
  return singleton(static_cast<int>(bits.size()), parse_bits(bits));
}

BigInt ParityRestrictedSet::size() const {
  if (form_ == Form::kHammingSlice) return binomial(n_, weight_);
  return members_.size();
}

double ParityRestrictedSet::size_as_double() const { return size().convert_to<double>(); }

bool ParityRestrictedSet::contains(Word x) const {
  if (form_ == Form::kHammingSlice) return n_ <= 64 && (x & ~low_mask(n_)) == 0 && popcount(x) == weight_;
  return std::binary_search(members_.begin(), members_.end(), x);
}

std::vector<Word> ParityRestrictedSet::members() const {
  if (form_ != Form::kHammingSlice) return members_;
  if (n_ > 24) throw BudgetExceeded("enumerating slice:" + std::to_string(n_) + " exceeds 2^24 strings");
  std::vector<Word> out;
  for (Word x = 0; x < (Word{1} << n_); ++x) {
    if (popcount(x) == weight_) out.push_back(x);
  }
  return out;
}

BitPredicate ParityRestrictedSet::membership() const {
  if (form_ == Form::kHammingSlice) return BitPredicate::weight_equals(n_, weight_);
  return BitPredicate::explicit_set(n_, members_);
}

std::string ParityRestrictedSet::to_text() const {
  if (form_ == Form::kHammingSlice) {
    return "slice:" + std::to_string(n_) + ":" + std::to_string(weight_);
  }
  std::string out;
  for (Word m : members_) {
    if (!out.empty()) out += ',';
    out += format_bits(m, n_);
  }
  return out;
}

ParityRestrictedSet parse_set(std::string_view text) {
  std::vector<std::string> items;
  while (!text.empty()) {
    const auto cut = text.find_first_of(",\n");
    std::string_view item = trim(text.substr(0, cut));
    text = cut == std::string_view::npos ? std::string_view{} : text.substr(cut + 1);
    if (const auto hash = item.find('#'); hash != std::string_view::npos) item = trim(item.substr(0, hash));
    if (item.empty()) continue;
    if (item.starts_with("slice:")) {
      const auto rest = item.substr(6);
      const auto colon = rest.find(':');
      if (colon == std::string_view::npos) throw std::invalid_argument("slice form is slice:n:w");
      if (!items.empty()) throw std::invalid_argument("slice form cannot be mixed with members");
      const int n = parse_int(rest.substr(0, colon), "slice n");
      const int w = parse_int(rest.substr(colon + 1), "slice weight");
      if (!trim(text).empty()) throw std::invalid_argument("slice form cannot be mixed with members");
      return ParityRestrictedSet::hamming_slice(n, w);
    }
    items.emplace_back(item);
  }
  if (items.empty()) throw std::invalid_argument("set text is empty");
  if (items.size() == 1) return ParityRestrictedSet::singleton(items.front());
  return ParityRestrictedSet::from_strings(items);
}

F2Echelon::F2Echelon(int n) : n_(n), rows_(static_cast<std::size_t>(std::max(n, 1)), 0) {
  if (n < 1 || n > 64) throw std::invalid_argument("F2 vectors need 1 <= n <= 64");
}

Word F2Echelon::reduce(Word v) const {
  for (int b = n_ - 1; b >= 0 && v != 0; --b) {
    if ((v >> b) & 1u) v ^= rows_[static_cast<std::size_t>(b)];
  }
  return v;
}

bool F2Echelon::insert(Word v) {
  v = reduce(v);
  if (v == 0) return false;
  const int lead = std::bit_width(v) - 1;
  rows_[static_cast<std::size_t>(lead)] = v;
  ++rank_;
  return true;
}

bool F2Echelon::in_span(Word v) const { return reduce(v) == 0; }

int f2_rank(int n, const std::vector<Word>& vectors) {
  F2Echelon e(n);
  for (Word v : vectors) e.insert(v);
  return e.rank();
}

F2Basis subs_complement_basis(const ParityRestrictedSet& set, int c) {
  const int n = set.n();
  if (c < 1 || c > 6) throw std::invalid_argument("c must lie in [1, 6]");
  if (n > 20) throw BudgetExceeded("subs_complement_basis enumerates the parity class and supports n <= 20");
  if (n - c >= 0 && set.size() < (BigInt{1} << (n - c))) {
    throw std::invalid_argument("|S| = " + set.size().str() + " < 2^(n-c) = 2^" + std::to_string(n - c));
  }
  const Word flip = set.parity() ? single_bit(n, 0) : 0;
  std::vector<Word> shifted = set.members();
  for (Word& s : shifted) s ^= flip;
  const int rank = f2_rank(n, shifted);
  if (rank < n - c) {
    throw std::invalid_argument("span deficiency: rank " + std::to_string(rank) + " < n - c = " +
                                std::to_string(n - c));
  }

  // Greedy cover of the even-weight class by translates of S: each new vector
  // is x ^ s for the smallest uncovered x, picking the s that covers the most.
  const Word dim = Word{1} << n;
  std::vector<std::uint8_t> covered(dim, 0);
  for (Word s : shifted) covered[s] = 1;
  const std::size_t candidate_limit = n > 14 ? 64 : 512;
  F2Basis basis{n, {}};
  Word next = 0;
  while (true) {
    while (next < dim && (covered[next] || popcount(next) % 2 != 0)) ++next;
    if (next == dim) break;
    Word best = 0;
    std::uint64_t best_gain = 0;
    for (std::size_t i = 0; i < std::min(candidate_limit, shifted.size()); ++i) {
      const Word t = next ^ shifted[i];
      std::uint64_t gain = 0;
      for (Word w = 0; w < dim; ++w) gain += !covered[w] && covered[w ^ t];
      if (gain > best_gain || (gain == best_gain && t < best)) {
        best = t;
        best_gain = gain;
      }
    }
    for (Word w = 0; w < dim; ++w) {
      if (covered[w ^ best] && !covered[w]) covered[w] = 2;
    }
    for (Word w = 0; w < dim; ++w) covered[w] = covered[w] ? 1 : 0;
    basis.vectors.push_back(best);
  }
  return basis;
}

Restriction restrict_fixing_indices(const ParityRestrictedSet& set) {
  std::vector<Word> current = set.members();
  const int n = set.n();
  Restriction out;
  while (current.size() > 1) {
    const Word all_and = std::accumulate(current.begin(), current.end(), ~Word{0}, std::bit_and<>());
    const Word all_or = std::accumulate(current.begin(), current.end(), Word{0}, std::bit_or<>());
    const Word differ = (all_and ^ all_or) & low_mask(n);
    const int index = n - std::bit_width(differ);  // lowest string index that differs
    const Word bit = single_bit(n, index);
    std::vector<Word> zeros, ones;
    for (Word w : current) (w & bit ? ones : zeros).push_back(w);
    // current is sorted, so zeros.front() is the smallest string overall.
    current = ones.size() < zeros.size() ? std::move(ones) : std::move(zeros);
    out.indices.push_back(index);
  }
  out.element = current.front();
  return out;
}

std::vector<Word> span_enumerate(const F2Basis& basis) {
  const auto d = basis.vectors.size();
  if (d > 20) throw std::invalid_argument("span_enumerate supports at most 20 basis vectors");
  std::vector<Word> out;
  out.reserve(std::size_t{1} << d);
  Word current = 0;
  out.push_back(current);
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << d); ++i) {
    current ^= basis.vectors[static_cast<std::size_t>(std::countr_zero(i))];
    out.push_back(current);
  }
  return out;
}

ParityRestrictedSet sample_parity_restricted_set(int n, std::uint64_t size, int parity, CounterRng& rng) {
  if (n < 1 || n > 24) throw std::invalid_argument("sampling supports 1 <= n <= 24");
  if (parity != 0 && parity != 1) throw std::invalid_argument("parity must be 0 or 1");
  const std::uint64_t class_size = n == 1 ? 1 : std::uint64_t{1} << (n - 1);
  if (size < 1 || size > class_size) throw std::invalid_argument("sample size out of range");
  // Class member k: first n-1 bits are k, last bit fixes the parity.
  auto member = [&](std::uint64_t k) -> Word {
    if (n == 1) return static_cast<Word>(parity);
    return (k << 1) | static_cast<Word>((popcount(k) & 1) ^ parity);
  };
  std::vector<Word> chosen;
  chosen.reserve(size);
  if (2 * size >= class_size) {
    std::vector<std::uint64_t> pool(class_size);
    std::iota(pool.begin(), pool.end(), 0);
    for (std::uint64_t i = 0; i < size; ++i) {
      std::swap(pool[i], pool[i + rng.below(class_size - i)]);
      chosen.push_back(member(pool[i]));
    }
  } else {
    std::unordered_set<std::uint64_t> seen;
    while (chosen.size() < size) {
      const std::uint64_t k = rng.below(class_size);
      if (seen.insert(k).second) chosen.push_back(member(k));
    }
  }
  return ParityRestrictedSet::explicit_list(n, std::move(chosen));
}

}  // namespace neko
