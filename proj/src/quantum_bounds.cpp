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

#include "posetbounds/quantum_bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "posetbounds/errors.hpp"
#include "posetbounds/harmonic.hpp"

namespace posetbounds {

DVector d_vector(const Poset& p, const LinearExtension& sigma) {
  if (!sigma.is_extension_of(p)) throw NotAnExtension("permutation is not a linear extension");
  const std::size_t n = p.size();
  DVector d(n);
  for (Element i = 0; i < n; ++i) {
    std::size_t below = 0;
    for (Element j = 0; j < n; ++j) {
      if (p.less(j, i)) below = std::max(below, sigma.rank(j));
    }
    d[i] = sigma.rank(i) - below;
  }
  return d;
}

namespace {

/// hist[q] = number of (sigma, i) with d_i(sigma) - 1 == q.
struct DHistogram {
  std::vector<unsigned long long> hist;
  std::size_t extensions = 0;
};

DHistogram d_histogram(const Poset& p, std::size_t cap) {
  const std::size_t n = p.size();
  DHistogram h;
  h.hist.assign(n, 0);
  std::vector<std::vector<Element>> preds(n);
  for (Element i = 0; i < n; ++i) preds[i] = p.predecessors(i);
  h.extensions = for_each_extension(
      p,
      [&](const LinearExtension& sigma) {
        for (Element i = 0; i < n; ++i) {
          std::size_t below = 0;
          for (Element j : preds[i]) below = std::max(below, sigma.rank(j));
          ++h.hist[sigma.rank(i) - below - 1];
        }
      },
      cap);
  return h;
}

}  // namespace

mpq_class qlb_enum(const Poset& p, std::size_t cap) {
  const DHistogram h = d_histogram(p, cap);
  mpq_class total = 0;
  for (std::size_t q = 1; q < h.hist.size(); ++q) {
    if (h.hist[q]) total += mpq_class(mpz_class(std::to_string(h.hist[q]))) * harmonic(q);
  }
  total /= mpq_class(static_cast<unsigned long>(h.extensions));
  total.canonicalize();
  return total;
}

mpq_class qh_exact(const Poset& p, std::size_t cap) {
  const auto n = static_cast<unsigned long>(p.size());
  mpq_class qh = harmonic(n) - qlb_enum(p, cap) / mpq_class(n);
  qh.canonicalize();
  return qh;
}

McEstimate qh_mc(const Poset& p, std::size_t samples, std::uint64_t seed) {
  if (samples < 2) throw ValueError("qh_mc needs at least two samples");
  const PolytopeSampler sampler(p);
  std::mt19937_64 rng(seed);
  const double inv_n = 1.0 / static_cast<double>(p.size());
  double mean = 0.0, m2 = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    ChainPoint z = sampler.chain_point(rng);
    while (z.minCoeff() <= 0.0) z = sampler.chain_point(rng);  // measure-zero event
    const double h = -inv_n * z.array().log().sum();
    // Welford update.
    const double delta = h - mean;
    mean += delta / static_cast<double>(s + 1);
    m2 += delta * (h - mean);
  }
  const double var = m2 / static_cast<double>(samples - 1);
  return {mean, std::sqrt(var / static_cast<double>(samples))};
}

mpq_class composition_gain(std::size_t n1, std::size_t n2) {
  const std::size_t n = n1 + n2;
  mpq_class g = mpq_class(static_cast<unsigned long>(n)) * harmonic(n) -
                mpq_class(static_cast<unsigned long>(n1)) * harmonic(n1) -
                mpq_class(static_cast<unsigned long>(n2)) * harmonic(n2);
  g.canonicalize();
  return g;
}

mpq_class qlb_sp(const SpExpr& e) {
  switch (e.kind()) {
    case SpExpr::Kind::Singleton:
      return 0;
    case SpExpr::Kind::NBlock:
      throw UnsupportedNBlock("no exact series-parallel rule for N(" +
                              std::to_string(e.block_size()) + ")");
    case SpExpr::Kind::Series: {
      mpq_class total = 0;
      for (const auto& c : e.children()) total += qlb_sp(c);
      return total;
    }
    case SpExpr::Kind::Parallel: {
      mpq_class total = qlb_sp(e.children().front());
      std::size_t size = e.children().front().size();
      for (std::size_t c = 1; c < e.children().size(); ++c) {
        const auto& child = e.children()[c];
        total += qlb_sp(child) + composition_gain(size, child.size());
        size += child.size();
      }
      total.canonicalize();
      return total;
    }
  }
  return 0;
}

namespace {

mpz_class binomial(std::size_t n, std::size_t k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace

NkBounds nk_bounds(std::size_t k) {
  if (k < 1) throw ValueError("nk_bounds needs k >= 1");
  NkBounds b;
  b.itlb_lo = log_mpz(binomial(2 * k, k));
  b.itlb_hi = log_mpz(binomial(4 * k, 2 * k));
  b.qlb_lo = 2 * composition_gain(k, k);
  return b;
}

double tech_ratio(std::size_t n1, std::size_t n2) {
  if (n1 < 1 || n2 < 1) throw DomainError("tech_ratio needs n1, n2 >= 1");
  return nearest_double(composition_gain(n1, n2)) / log_mpz(binomial(n1 + n2, n1));
}

TechConstant tech_constant(std::size_t max_n,
                           const std::function<void(std::size_t, std::size_t, double)>& visit) {
  if (max_n < 2) throw ValueError("tech_constant needs max_n >= 2");
  // m H_m for every m <= 2 max_n, exact.
  std::vector<mpq_class> weighted(2 * max_n + 1);
  for (std::size_t m = 0; m < weighted.size(); ++m) {
    weighted[m] = mpq_class(static_cast<unsigned long>(m)) * harmonic(m);
  }
  TechConstant best{std::numeric_limits<double>::infinity(), 0, 0};
  mpq_class gain;
  for (std::size_t n1 = 1; n1 <= max_n; ++n1) {
    for (std::size_t n2 = n1; n2 <= max_n; ++n2) {
      gain = weighted[n1 + n2] - weighted[n1] - weighted[n2];
      const double ratio = nearest_double(gain) / log_mpz(binomial(n1 + n2, n1));
      if (visit) visit(n1, n2, ratio);
      if (ratio < best.c_min) best = {ratio, n1, n2};
    }
  }
  return best;
}

}  // namespace posetbounds
