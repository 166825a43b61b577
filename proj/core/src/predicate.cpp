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

#include "neko/predicate.hpp"

#include <algorithm>
#include <stdexcept>

namespace neko {
namespace {

void check_arity(int arity) {
  if (arity < 0) throw std::invalid_argument("predicate arity must be non-negative");
}

}  // namespace

BitPredicate BitPredicate::explicit_set(int arity, std::vector<Word> members) {
  check_arity(arity);
  if (arity > 64) throw std::invalid_argument("explicit predicates support at most 64 bits");
  for (Word m : members) {
    if ((m & ~low_mask(arity)) != 0) {
      throw std::invalid_argument("explicit predicate member wider than arity");
    }
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  BitPredicate p(Kind::kExplicit, arity);
  p.members_ = std::move(members);
  return p;
}

BitPredicate BitPredicate::weight_at_least(int arity, int k) {
  check_arity(arity);
  if (k < 0) throw std::invalid_argument("threshold must be non-negative");
  BitPredicate p(Kind::kWeightAtLeast, arity);
  p.k_ = k;
  return p;
}

BitPredicate BitPredicate::weight_equals(int arity, int k) {
  check_arity(arity);
  if (k < 0) throw std::invalid_argument("weight must be non-negative");
  BitPredicate p(Kind::kWeightEquals, arity);
  p.k_ = k;
  return p;
}

BitPredicate BitPredicate::weight_mod(int arity, int modulus, int residue) {
  check_arity(arity);
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
  if (residue < 0 || residue >= modulus) {
    throw std::invalid_argument("residue must lie in [0, modulus)");
  }
  BitPredicate p(Kind::kWeightMod, arity);
  p.modulus_ = modulus;
  p.k_ = residue;
  return p;
}

BitPredicate BitPredicate::all_ones(int arity) {
  check_arity(arity);
  return BitPredicate(Kind::kAllOnes, arity);
}

BitPredicate BitPredicate::all_zeros(int arity) {
  check_arity(arity);
  return BitPredicate(Kind::kAllZeros, arity);
}

BitPredicate BitPredicate::not_all_zeros(int arity) {
  check_arity(arity);
  return BitPredicate(Kind::kNotAllZeros, arity);
}

bool BitPredicate::on_weight(int weight) const {
  switch (kind_) {
    case Kind::kWeightAtLeast:
      return weight >= k_;
    case Kind::kWeightEquals:
      return weight == k_;
    case Kind::kWeightMod:
      return weight % modulus_ == k_;
    case Kind::kAllOnes:
      return weight == arity_;
    case Kind::kAllZeros:
      return weight == 0;
    case Kind::kNotAllZeros:
      return weight != 0;
    case Kind::kExplicit:
      break;
  }
  throw std::logic_error("on_weight called on an explicit predicate");
}

bool BitPredicate::operator()(Word pattern) const {
  if (kind_ == Kind::kExplicit) {
    return std::binary_search(members_.begin(), members_.end(), pattern);
  }
  return on_weight(popcount(pattern));
}

std::string BitPredicate::describe() const {
  const std::string n = std::to_string(arity_);
  switch (kind_) {
    case Kind::kExplicit:
      return "member[" + n + "," + std::to_string(members_.size()) + "]";
    case Kind::kWeightAtLeast:
      return "weight>=" + std::to_string(k_);
    case Kind::kWeightEquals:
      return "weight==" + std::to_string(k_);
    case Kind::kWeightMod:
      return "weight%" + std::to_string(modulus_) + "==" + std::to_string(k_);
    case Kind::kAllOnes:
      return "all-ones";
    case Kind::kAllZeros:
      return "all-zeros";
    case Kind::kNotAllZeros:
      return "not-all-zeros";
  }
  return "?";
}

}  // namespace neko
