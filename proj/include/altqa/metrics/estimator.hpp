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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include <boost/multiprecision/cpp_int.hpp>

namespace altqa::metrics {

// Expected precision / recall / F1 of a uniformly drawn size-k subset of k'
// sampled predictions. Each hits entry is the index of the reference key a
// prediction matched, or nullopt. For a subset with s positive predictions
// covering u distinct keys out of g: p = s/k, r = u/g, f1 = 2su/(gs + ku)
// when s, u > 0 and 0 otherwise.

using HitEntry = std::optional<std::size_t>;

struct AtKEstimate {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

enum class EstimatorStrategy {
  // Tally subsets by (s, u) class via per-key multiplicity convolution;
  // O(g * k^2) and no subset is materialised.
  kCounting,
  // Visit every subset. Refused above kEnumerationLimit subsets.
  kEnumeration,
};

inline constexpr std::uint64_t kEnumerationLimit = 1'000'000;

// Throws kSubsetSizeOutOfRange unless 1 <= k <= hits.size(); kInvalidArgument
// when g = 0 or a key index is >= g; kEnumerationGuard for oversized
// enumeration; kBinomialOverflow when subset counts exceed 128 bits.
AtKEstimate estimate_at_k(std::span<const HitEntry> hits, std::size_t g, std::size_t k,
                          EstimatorStrategy strategy = EstimatorStrategy::kCounting);

using Rational = boost::multiprecision::cpp_rational;

struct ExactAtKEstimate {
  Rational precision;
  Rational recall;
  Rational f1;
};

// Counting strategy in exact rational arithmetic (no overflow limit).
ExactAtKEstimate estimate_at_k_exact(std::span<const HitEntry> hits, std::size_t g,
                                     std::size_t k);

}  // namespace altqa::metrics
