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

#include <cmath>
#include <stdexcept>

#include "neko/analysis.hpp"

namespace neko {
namespace {

// num / 2^den_exp as a double, shifting before conversion so large
// numerators keep their leading bits.
double dyadic_to_double(const BigInt& num, long den_exp) {
  if (num == 0) return 0.0;
  const BigInt mag = abs(num);
  const auto top = static_cast<long>(boost::multiprecision::msb(mag));
  const long shift = std::max(0L, top - 62);
  const double head = static_cast<BigInt>(mag >> shift).convert_to<double>();
  const double value = std::ldexp(head, static_cast<int>(shift - den_exp));
  return num < 0 ? -value : value;
}

BigInt power(const BigInt& base, int e) {
  BigInt out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

BigInt krawtchouk(int n, int w, int j) {
  BigInt sum = 0;
  for (int i = 0; i <= std::min(j, w); ++i) {
    const BigInt term = binomial(j, i) * binomial(n - j, w - i);
    if (i & 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

GridDistribution slice_symmetric_stats(int n, int w, int m) {
  if (n < 2 || n > 128 || n % 2 != 0) throw std::invalid_argument("symmetric analyzer needs even n in [2, 128]");
  if (w < 0 || w > n) throw std::invalid_argument("slice weight must lie in [0, n]");
  if (m < 1) throw std::invalid_argument("grid needs m >= 1");

  // psi_S(y) = N_|y| / 2^(n-1) and the column amplitude at y is A_|y| / 2^(2n-2).
  const BigInt half = BigInt{1} << (n - 1);
  std::vector<BigInt> numer(static_cast<std::size_t>(n + 1));
  for (int j = 0; j <= n; ++j) numer[static_cast<std::size_t>(j)] = (j == 0 ? half : BigInt{0}) - krawtchouk(n, w, j);
  const BigInt& n_ones = numer[static_cast<std::size_t>(n)];
  std::vector<BigInt> amp(static_cast<std::size_t>(n + 1));
  for (int j = 0; j <= n; ++j) {
    amp[static_cast<std::size_t>(j)] =
        (j == n ? BigInt{1} << (2 * n - 2) : BigInt{0}) - 2 * n_ones * numer[static_cast<std::size_t>(j)];
  }
  const long prob_exp = 4L * n - 4;  // probabilities carry denominator 2^prob_exp

  GridDistribution g;
  g.n = n;
  g.m = m;
  g.set_size = binomial(n, w).convert_to<double>();
  g.gamma0 = dyadic_to_double(numer[0] * numer[0], 2L * n - 2);
  g.gamma1 = dyadic_to_double(n_ones * n_ones, 2L * n - 2);
  const BigInt a0 = amp[0] * amp[0];
  const BigInt a1 = amp[static_cast<std::size_t>(n)] * amp[static_cast<std::size_t>(n)];
  g.p0 = dyadic_to_double(a0, prob_exp);
  g.p1 = dyadic_to_double(a1, prob_exp);

  // q_t: column mass on strings that are 1 on a fixed t-subset of rows.
  BigInt zero_numer = 0;
  for (int t = 0; t <= n; ++t) {
    BigInt q = 0;
    for (int j = t; j <= n; ++j) {
      q += binomial(n - t, j - t) * amp[static_cast<std::size_t>(j)] * amp[static_cast<std::size_t>(j)];
    }
    const BigInt term = binomial(n, t) * power(q, m);
    if (t & 1) {
      zero_numer -= term;
    } else {
      zero_numer += term;
    }
  }
  const long total_exp = prob_exp * m;
  g.p_zero = dyadic_to_double(zero_numer, total_exp);
  g.p_one = dyadic_to_double(power(a1, m), total_exp);
  g.p_mixed = dyadic_to_double((BigInt{1} << total_exp) - zero_numer - power(a1, m), total_exp);
  g.p_bad = dyadic_to_double((BigInt{1} << total_exp) - power(a0 + a1, m), total_exp);
  g.p_bad_union = m * dyadic_to_double((BigInt{1} << prob_exp) - a0 - a1, prob_exp);
  const double root = std::sqrt(std::max(g.p_zero, 0.0)) + std::sqrt(std::max(g.p_one, 0.0));
  g.fidelity = root * root / 2.0;
  g.epsilon = 1.0 - g.fidelity;
  return g;
}

}  // namespace neko
