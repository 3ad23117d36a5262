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

#include "posetbounds/linext.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "posetbounds/errors.hpp"

namespace posetbounds {

LinearExtension::LinearExtension(std::vector<std::size_t> rank) : rank_(std::move(rank)) {
  std::vector<bool> seen(rank_.size() + 1, false);
  for (std::size_t r : rank_) {
    if (r < 1 || r > rank_.size() || seen[r]) throw ValueError("ranks must be a permutation of 1..n");
    seen[r] = true;
  }
}

LinearExtension LinearExtension::from_order(const std::vector<Element>& order) {
  std::vector<std::size_t> rank(order.size(), 0);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    if (order[pos] >= order.size()) throw IndexError("element out of range in order");
    rank[order[pos]] = pos + 1;
  }
  return LinearExtension(std::move(rank));
}

std::vector<Element> LinearExtension::order() const {
  std::vector<Element> out(rank_.size());
  for (Element i = 0; i < rank_.size(); ++i) out[rank_[i] - 1] = i;
  return out;
}

bool LinearExtension::is_extension_of(const Poset& p) const {
  if (p.size() != size()) return false;
  for (Element i = 0; i < size(); ++i) {
    for (Element j = 0; j < size(); ++j) {
      if (p.less(i, j) && rank_[i] > rank_[j]) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

ExtensionCounter::ExtensionCounter(const Poset& p, std::size_t max_elements) : poset_(p) {
  const std::size_t n = p.size();
  if (n > max_elements || n > 64) {
    throw LimitExceeded("extension counting limited to n <= " +
                        std::to_string(std::min<std::size_t>(max_elements, 64)) +
                        " (got n = " + std::to_string(n) + ")");
  }
  full_ = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  pred_.resize(n);
  for (Element i = 0; i < n; ++i) pred_[i] = p.predecessor_mask(i);
  fill(0);
}

const mpz_class& ExtensionCounter::fill(std::uint64_t ideal) {
  if (auto it = memo_.find(ideal); it != memo_.end()) return it->second;
  mpz_class total = 0;
  if (ideal == full_) {
    total = 1;
  } else {
    for (Element i = 0; i < pred_.size(); ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if ((ideal & bit) || (pred_[i] & ~ideal)) continue;
      total += fill(ideal | bit);
    }
  }
  return memo_.emplace(ideal, std::move(total)).first->second;
}

const mpz_class& ExtensionCounter::completions(std::uint64_t ideal) const {
  auto it = memo_.find(ideal);
  if (it == memo_.end()) throw ValueError("not an order ideal of the poset");
  return it->second;
}

namespace {

/// Uniform integer in [0, bound), bound > 0.
mpz_class uniform_below(const mpz_class& bound, std::mt19937_64& rng) {
  if (bound.fits_ulong_p()) {
    std::uniform_int_distribution<unsigned long> dist(0, bound.get_ui() - 1);
    return mpz_class(dist(rng));
  }
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  mpz_class draw;
  do {
    draw = 0;
    for (std::size_t w = 0; w < words; ++w) {
      draw <<= 64;
      draw += mpz_class(static_cast<unsigned long>(rng()));
    }
    draw >>= words * 64 - bits;
  } while (draw >= bound);
  return draw;
}

}  // namespace

LinearExtension ExtensionCounter::sample(std::mt19937_64& rng) const {
  const std::size_t n = pred_.size();
  std::vector<Element> order;
  order.reserve(n);
  std::uint64_t ideal = 0;
  mpz_class running;
  while (ideal != full_) {
    const mpz_class& total = completions(ideal);
    const bool small = total.fits_ulong_p();
    const mpz_class target = uniform_below(total, rng);
    const unsigned long small_target = small ? target.get_ui() : 0;
    unsigned long acc = 0;
    running = 0;
    Element chosen = n;
    for (Element i = 0; i < n && chosen == n; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if ((ideal & bit) || (pred_[i] & ~ideal)) continue;
      const mpz_class& c = completions(ideal | bit);
      if (small) {
        acc += c.get_ui();
        if (small_target < acc) chosen = i;
      } else {
        running += c;
        if (target < running) chosen = i;
      }
    }
    order.push_back(chosen);
    ideal |= std::uint64_t{1} << chosen;
  }
  return LinearExtension::from_order(order);
}

mpz_class count_extensions(const Poset& p, std::size_t max_elements) {
  return ExtensionCounter(p, max_elements).count();
}

double log_mpz(const mpz_class& value) {
  if (value <= 0) throw DomainError("log of a non-positive integer");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

double itlb(const Poset& p, std::size_t max_elements) {
  return log_mpz(count_extensions(p, max_elements));
}

namespace {

struct Enumerator {
  const std::vector<std::uint64_t>& pred;
  const std::function<void(const LinearExtension&)>& visit;
  std::uint64_t full;
  std::vector<Element> order;
  std::size_t visited = 0;

  void run(std::uint64_t placed) {
    if (placed == full) {
      visit(LinearExtension::from_order(order));
      ++visited;
      return;
    }
    for (Element i = 0; i < pred.size(); ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if ((placed & bit) || (pred[i] & ~placed)) continue;
      order.push_back(i);
      run(placed | bit);
      order.pop_back();
    }
  }
};

}  // namespace

std::size_t for_each_extension(const Poset& p,
                               const std::function<void(const LinearExtension&)>& visit,
                               std::size_t cap, std::size_t max_elements) {
  const ExtensionCounter counter(p, max_elements);
  if (counter.count() > mpz_class(static_cast<unsigned long>(cap))) {
    throw LimitExceeded("poset has " + counter.count().get_str() +
                        " linear extensions, above the enumeration cap of " + std::to_string(cap));
  }
  std::vector<std::uint64_t> pred(p.size());
  for (Element i = 0; i < p.size(); ++i) pred[i] = p.predecessor_mask(i);
  const std::uint64_t full = p.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << p.size()) - 1;
  Enumerator e{pred, visit, full, {}, 0};
  e.order.reserve(p.size());
  e.run(0);
  return e.visited;
}

std::vector<LinearExtension> enumerate_extensions(const Poset& p, std::size_t cap) {
  std::vector<LinearExtension> out;
  for_each_extension(p, [&](const LinearExtension& s) { out.push_back(s); }, cap);
  return out;
}

LinearExtension sample_extension(const Poset& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return ExtensionCounter(p).sample(rng);
}

mpz_class count_extensions_sp(const SpExpr& e) {
  switch (e.kind()) {
    case SpExpr::Kind::Singleton:
      return 1;
    case SpExpr::Kind::NBlock:
      throw UnsupportedNBlock("no exact series-parallel rule for N(" +
                              std::to_string(e.block_size()) + ")");
    case SpExpr::Kind::Series: {
      mpz_class total = 1;
      for (const auto& c : e.children()) total *= count_extensions_sp(c);
      return total;
    }
    case SpExpr::Kind::Parallel: {
      // Interleavings: multinomial(n; n_1, ..., n_m) built as a product of binomials.
      mpz_class total = 1;
      unsigned long placed = 0;
      for (const auto& c : e.children()) {
        mpz_class binom;
        placed += c.size();
        mpz_bin_uiui(binom.get_mpz_t(), placed, c.size());
        total *= binom * count_extensions_sp(c);
      }
      return total;
    }
  }
  return 0;
}

}  // namespace posetbounds
