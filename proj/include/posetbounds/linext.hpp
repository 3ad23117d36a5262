// Copyright 2026 The posetbounds Authors
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
#include <functional>
#include <random>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "posetbounds/poset.hpp"
#include "posetbounds/sp_expr.hpp"

namespace posetbounds {

inline constexpr std::size_t kDefaultMaxElements = 20;
inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// A total order compatible with a poset; rank[i] in {1..n} is the position of
/// element i.
class LinearExtension {
 public:
  LinearExtension() = default;
  explicit LinearExtension(std::vector<std::size_t> rank);
  /// From the element sequence order[0] < order[1] < ... (0-based elements).
  static LinearExtension from_order(const std::vector<Element>& order);

  std::size_t size() const noexcept { return rank_.size(); }
  std::size_t rank(Element i) const { return rank_[i]; }
  const std::vector<std::size_t>& ranks() const noexcept { return rank_; }
  /// Elements listed by increasing rank.
  std::vector<Element> order() const;

  bool is_extension_of(const Poset& p) const;

  friend bool operator==(const LinearExtension&, const LinearExtension&) = default;
  friend auto operator<=>(const LinearExtension& a, const LinearExtension& b) {
    return a.order() <=> b.order();
  }

 private:
  std::vector<std::size_t> rank_;
};

/**
 * Downset dynamic program: completions(U) is the number of linear extensions
 * of the subposet P \ U, for every order ideal U reachable from the empty set.
 * Ideals are keyed by bitmask, so n is capped (default 20, hard limit 64).
 */
class ExtensionCounter {
 public:
  explicit ExtensionCounter(const Poset& p, std::size_t max_elements = kDefaultMaxElements);

  const Poset& poset() const noexcept { return poset_; }
  const mpz_class& count() const { return completions(0); }
  const mpz_class& completions(std::uint64_t ideal) const;
  std::size_t num_ideals() const noexcept { return memo_.size(); }

  /// Uniform over all linear extensions: the next element is chosen among the
  /// minimal elements of the remainder with probability proportional to the
  /// number of completions.
  LinearExtension sample(std::mt19937_64& rng) const;

 private:
  const mpz_class& fill(std::uint64_t ideal);

  Poset poset_;
  std::uint64_t full_ = 0;
  std::vector<std::uint64_t> pred_;
  std::unordered_map<std::uint64_t, mpz_class> memo_;
};

mpz_class count_extensions(const Poset& p, std::size_t max_elements = kDefaultMaxElements);

/// ln |Delta(P)| from the exact count, accurate to well below 1e-12.
double itlb(const Poset& p, std::size_t max_elements = kDefaultMaxElements);

/// Natural log of a positive big integer via its binary exponent and mantissa.
double log_mpz(const mpz_class& value);

/**
 * Calls `visit` on every linear extension in lexicographic order of the
 * element sequence. Throws LimitExceeded before visiting anything when the
 * count exceeds `cap`. Returns the number visited.
 */
std::size_t for_each_extension(const Poset& p,
                               const std::function<void(const LinearExtension&)>& visit,
                               std::size_t cap = kDefaultEnumerationCap,
                               std::size_t max_elements = kDefaultMaxElements);

std::vector<LinearExtension> enumerate_extensions(const Poset& p,
                                                  std::size_t cap = kDefaultEnumerationCap);

LinearExtension sample_extension(const Poset& p, std::uint64_t seed);

/// Exact |Delta| from the series-parallel structure: products for series,
/// multinomial coefficients for parallel. Throws UnsupportedNBlock.
mpz_class count_extensions_sp(const SpExpr& e);

}  // namespace posetbounds
