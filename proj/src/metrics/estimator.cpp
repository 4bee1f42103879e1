// Copyright 2026 The altqa Authors
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

#include "altqa/metrics/estimator.hpp"

#include <map>
#include <vector>

#include "altqa/common/error.hpp"

namespace altqa::metrics {

namespace {

__extension__ typedef unsigned __int128 u128;

// Arithmetic policies: checked 128-bit for the floating-point path, arbitrary
// precision for the exact path.
struct CheckedU128 {
  using Count = u128;
  static Count add(Count a, Count b) {
    Count r;
    if (__builtin_add_overflow(a, b, &r)) overflow();
    return r;
  }
  static Count mul(Count a, Count b) {
    Count r;
    if (__builtin_mul_overflow(a, b, &r)) overflow();
    return r;
  }
  [[noreturn]] static void overflow() {
    throw Error(ErrorCode::kBinomialOverflow, "subset count exceeds 128-bit range");
  }
};

struct BigCount {
  using Count = boost::multiprecision::cpp_int;
  static Count add(const Count& a, const Count& b) { return a + b; }
  static Count mul(const Count& a, const Count& b) { return a * b; }
};

template <class Policy>
typename Policy::Count binomial(std::size_t n, std::size_t r) {
  using Count = typename Policy::Count;
  if (r > n) return Count(0);
  if (r > n - r) r = n - r;
  Count c(1);
  for (std::size_t i = 0; i < r; ++i) {
    // c * (n - i) is divisible by (i + 1) at every step.
    c = Policy::mul(c, Count(n - i)) / Count(i + 1);
  }
  return c;
}

void validate(std::span<const HitEntry> hits, std::size_t g, std::size_t k) {
  if (k < 1 || k > hits.size()) {
    throw Error(ErrorCode::kSubsetSizeOutOfRange,
                "k=" + std::to_string(k) + " must be in [1, " + std::to_string(hits.size()) + "]");
  }
  if (g < 1) throw Error(ErrorCode::kInvalidArgument, "g must be >= 1");
  for (const HitEntry& h : hits) {
    if (h && *h >= g) {
      throw Error(ErrorCode::kInvalidArgument,
                  "key index " + std::to_string(*h) + " is not below g=" + std::to_string(g));
    }
  }
}

struct Multiplicities {
  std::vector<std::size_t> per_key;  // keys that occur at least once
  std::size_t misses = 0;
};

Multiplicities multiplicities(std::span<const HitEntry> hits) {
  std::map<std::size_t, std::size_t> counts;
  Multiplicities m;
  for (const HitEntry& h : hits) {
    if (h) {
      ++counts[*h];
    } else {
      ++m.misses;
    }
  }
  for (const auto& [key, n] : counts) m.per_key.push_back(n);
  return m;
}

// table[s][u]: number of size-k subsets with s positives covering u keys.
template <class Policy>
std::vector<std::vector<typename Policy::Count>> joint_counts(const Multiplicities& m,
                                                              std::size_t k) {
  using Count = typename Policy::Count;
  const std::size_t max_u = std::min(m.per_key.size(), k);
  std::vector<std::vector<Count>> dp(k + 1, std::vector<Count>(max_u + 1, Count(0)));
  dp[0][0] = Count(1);
  for (std::size_t mult : m.per_key) {
    std::vector<Count> choose(mult + 1);
    for (std::size_t j = 0; j <= mult; ++j) choose[j] = binomial<Policy>(mult, j);
    auto next = dp;  // j = 0: the key contributes nothing
    for (std::size_t s = 0; s <= k; ++s) {
      for (std::size_t u = 0; u < max_u; ++u) {
        if (dp[s][u] == Count(0)) continue;
        for (std::size_t j = 1; j <= mult && s + j <= k; ++j) {
          next[s + j][u + 1] = Policy::add(next[s + j][u + 1], Policy::mul(dp[s][u], choose[j]));
        }
      }
    }
    dp = std::move(next);
  }
  for (std::size_t s = 0; s <= k; ++s) {
    const Count fill = binomial<Policy>(m.misses, k - s);
    for (std::size_t u = 0; u <= max_u; ++u) {
      if (dp[s][u] != Count(0)) dp[s][u] = Policy::mul(dp[s][u], fill);
    }
  }
  return dp;
}

AtKEstimate count_strategy(std::span<const HitEntry> hits, std::size_t g, std::size_t k) {
  const auto table = joint_counts<CheckedU128>(multiplicities(hits), k);
  const long double denom = static_cast<long double>(binomial<CheckedU128>(hits.size(), k));
  const long double kk = static_cast<long double>(k);
  const long double gg = static_cast<long double>(g);
  long double sum_p = 0, sum_r = 0, sum_f1 = 0;
  for (std::size_t s = 0; s < table.size(); ++s) {
    for (std::size_t u = 0; u < table[s].size(); ++u) {
      if (table[s][u] == 0) continue;
      const long double w = static_cast<long double>(table[s][u]) / denom;
      const long double ss = static_cast<long double>(s);
      const long double uu = static_cast<long double>(u);
      sum_p += w * ss / kk;
      sum_r += w * uu / gg;
      if (s > 0 && u > 0) sum_f1 += w * 2.0L * ss * uu / (gg * ss + kk * uu);
    }
  }
  return {static_cast<double>(sum_p), static_cast<double>(sum_r), static_cast<double>(sum_f1)};
}

AtKEstimate enumerate_strategy(std::span<const HitEntry> hits, std::size_t g, std::size_t k) {
  const std::size_t n = hits.size();
  const u128 total = binomial<CheckedU128>(n, k);
  if (total > kEnumerationLimit) {
    throw Error(ErrorCode::kEnumerationGuard,
                "C(" + std::to_string(n) + "," + std::to_string(k) + ") subsets exceed the " +
                    std::to_string(kEnumerationLimit) + " enumeration limit");
  }
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  std::vector<char> seen(g);
  long double sum_p = 0, sum_r = 0, sum_f1 = 0;
  std::uint64_t visited = 0;
  while (true) {
    std::fill(seen.begin(), seen.end(), 0);
    std::size_t s = 0, u = 0;
    for (std::size_t idx : pick) {
      if (const HitEntry& h = hits[idx]; h) {
        ++s;
        if (!seen[*h]) {
          seen[*h] = 1;
          ++u;
        }
      }
    }
    const double p = static_cast<double>(s) / static_cast<double>(k);
    const double r = static_cast<double>(u) / static_cast<double>(g);
    sum_p += p;
    sum_r += r;
    if (p > 0 && r > 0) sum_f1 += 2.0 * p * r / (p + r);
    ++visited;

    // Advance to the next combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  const long double count = static_cast<long double>(visited);
  return {static_cast<double>(sum_p / count), static_cast<double>(sum_r / count),
          static_cast<double>(sum_f1 / count)};
}

}  // namespace

AtKEstimate estimate_at_k(std::span<const HitEntry> hits, std::size_t g, std::size_t k,
                          EstimatorStrategy strategy) {
  validate(hits, g, k);
  return strategy == EstimatorStrategy::kCounting ? count_strategy(hits, g, k)
                                                  : enumerate_strategy(hits, g, k);
}

ExactAtKEstimate estimate_at_k_exact(std::span<const HitEntry> hits, std::size_t g,
                                     std::size_t k) {
  validate(hits, g, k);
  using boost::multiprecision::cpp_int;
  const auto table = joint_counts<BigCount>(multiplicities(hits), k);
  const cpp_int denom = binomial<BigCount>(hits.size(), k);
  const cpp_int kk(k), gg(g);
  Rational sum_p(0), sum_r(0), sum_f1(0);
  for (std::size_t s = 0; s < table.size(); ++s) {
    for (std::size_t u = 0; u < table[s].size(); ++u) {
      const cpp_int& w = table[s][u];
      if (w == 0) continue;
      const cpp_int ss(s), uu(u);
      sum_p += Rational(w * ss, kk);
      sum_r += Rational(w * uu, gg);
      if (s > 0 && u > 0) sum_f1 += Rational(w * 2 * ss * uu, gg * ss + kk * uu);
    }
  }
  const Rational d(denom);
  return {sum_p / d, sum_r / d, sum_f1 / d};
}

}  // namespace altqa::metrics
