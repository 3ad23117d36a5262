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

#include "posetbounds/orderstats.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gmpxx.h>

#include "posetbounds/errors.hpp"
#include "posetbounds/harmonic.hpp"
#include "posetbounds/polytopes.hpp"
#include "posetbounds/quantum_bounds.hpp"

namespace posetbounds {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 61>;

template <typename F>
double integrate(F f, double a, double b) {
  if (a == b) return 0.0;
  double error = 0.0;
  const double value = Kronrod::integrate(f, a, b, 15, 1e-12, &error);
  if (!(error <= kQuadratureTol * std::max(1.0, std::abs(value)))) {
    std::ostringstream msg;
    msg << "quadrature error estimate " << error << " on [" << a << ", " << b
        << "] above tolerance (value " << value << ')';
    throw QuadratureFailure(msg.str());
  }
  return value;
}

void check_density_args(std::size_t n, std::size_t k) {
  if (k >= n) {
    throw DomainError("need 0 <= k < n (got n = " + std::to_string(n) + ", k = " +
                      std::to_string(k) + ")");
  }
}

void check_unit(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw DomainError("s must lie in [0, 1]");
}

}  // namespace

double binomial_coefficient(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return mpz_sizeinbase(b.get_mpz_t(), 2) <= 53 ? b.get_d() : nearest_double(mpq_class(b));
}

double density_f(std::size_t n, std::size_t k, double s) {
  check_density_args(n, k);
  check_unit(s);
  return static_cast<double>(n) * binomial_coefficient(n - 1, k) * std::pow(s, k) *
         std::pow(1.0 - s, static_cast<double>(n - k - 1));
}

double density_f_cdf(std::size_t n, std::size_t k, double s) {
  check_density_args(n, k);
  check_unit(s);
  double total = 0.0;
  for (std::size_t l = k + 1; l <= n; ++l) {
    total += binomial_coefficient(n, l) * std::pow(s, l) * std::pow(1.0 - s, n - l);
  }
  return total;
}

double integral_I_closed(std::size_t n, std::size_t k, double s) {
  if (k < 1 || k > n) throw DomainError("I needs 1 <= k <= n");
  check_unit(s);
  return std::pow(1.0 - s, n);
}

double integral_J_closed(std::size_t n, std::size_t k, double s) {
  check_density_args(n, k);
  check_unit(s);
  double total = 0.0;
  for (std::size_t l = k + 1; l <= n; ++l) {
    total += binomial_coefficient(n, l) * std::pow(s, n - l) * std::pow(1.0 - s, l);
  }
  return total;
}

double integral_H_closed(std::size_t n, std::size_t k) {
  check_density_args(n, k);
  const mpq_class diff = harmonic(k) - harmonic(n);
  return nearest_double(diff);
}

double integral_I_quadrature(std::size_t n, std::size_t k, double s) {
  if (k < 1 || k > n) throw DomainError("I needs 1 <= k <= n");
  check_unit(s);
  const double scale = static_cast<double>(k) * binomial_coefficient(n, k);
  return integrate(
      [&](double t) {
        return scale * std::pow(t, n - k) * std::pow(std::max(0.0, 1.0 - t - s), k - 1);
      },
      0.0, 1.0 - s);
}

double integral_J_quadrature(std::size_t n, std::size_t k, double s) {
  check_density_args(n, k);
  check_unit(s);
  return integrate([&](double t) { return density_f(n, k, std::min(1.0, std::max(0.0, t))); },
                   0.0, 1.0 - s);
}

double integral_H_quadrature(std::size_t n, std::size_t k) {
  check_density_args(n, k);
  const double scale = static_cast<double>(n) * binomial_coefficient(n - 1, k);
  const double m = static_cast<double>(n - k - 1);
  // [eps, 1] directly; (0, eps) after t = e^{-u}, dt = -e^{-u} du.
  const double upper = integrate(
      [&](double t) { return scale * std::pow(t, k) * std::pow(1.0 - t, m) * std::log(t); },
      kLogSplit, 1.0);
  const double lower = integrate(
      [&](double u) {
        const double t = std::exp(-u);
        return -scale * u * std::pow(t, k + 1) * std::pow(1.0 - t, m);
      },
      -std::log(kLogSplit), std::numeric_limits<double>::infinity());
  return upper + lower;
}

double density_f_integral(std::size_t n, std::size_t k) {
  check_density_args(n, k);
  return integrate([&](double s) { return density_f(n, k, std::min(1.0, std::max(0.0, s))); },
                   0.0, 1.0);
}

ClosedFormResiduals closed_form_checks(std::size_t n, std::size_t k, double s) {
  check_unit(s);
  ClosedFormResiduals r;
  if (k >= 1 && k <= n) {
    r.I = std::abs(integral_I_quadrature(n, k, s) - integral_I_closed(n, k, s));
  }
  if (k < n) {
    r.J = std::abs(integral_J_quadrature(n, k, s) - integral_J_closed(n, k, s));
    r.H = std::abs(integral_H_quadrature(n, k) - integral_H_closed(n, k));
  }
  return r;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double ma = static_cast<double>(a.size());
  const double mb = static_cast<double>(b.size());
  std::size_t ia = 0, ib = 0;
  double worst = 0.0;
  while (ia < a.size() && ib < b.size()) {
    const double x = std::min(a[ia], b[ib]);
    while (ia < a.size() && a[ia] <= x) ++ia;
    while (ib < b.size() && b[ib] <= x) ++ib;
    worst = std::max(worst, std::abs(static_cast<double>(ia) / ma - static_cast<double>(ib) / mb));
  }
  return worst;
}

double ks_critical(std::size_t m, double alpha) {
  return std::sqrt(-std::log(alpha / 2.0) / 2.0) / std::sqrt(static_cast<double>(m));
}

double ks_critical_two_sample(std::size_t m1, std::size_t m2, double alpha) {
  const double a = static_cast<double>(m1), b = static_cast<double>(m2);
  return std::sqrt(-std::log(alpha / 2.0) / 2.0) * std::sqrt((a + b) / (a * b));
}

std::vector<double> sample_gaps(std::size_t n, std::size_t i, std::size_t d, std::size_t samples,
                                std::uint64_t seed) {
  if (d < 1 || i + d > n) throw DomainError("gap needs 0 <= i < i + d <= n");
  if (samples < kMinKsSamples) {
    throw ValueError("KS checks need at least " + std::to_string(kMinKsSamples) + " samples");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> z(n + 1, 0.0);
  std::vector<double> gaps(samples);
  for (double& g : gaps) {
    for (std::size_t r = 1; r <= n; ++r) z[r] = unit(rng);
    std::sort(z.begin() + 1, z.end());
    g = z[i + d] - z[i];
  }
  return gaps;
}

double gap_distribution_check(std::size_t n, std::size_t i, std::size_t d, std::size_t samples,
                              std::uint64_t seed) {
  std::vector<double> gaps = sample_gaps(n, i, d, samples, seed);
  return ks_statistic(gaps, [&](double s) { return density_f_cdf(n, d - 1, s); });
}

ExpLnResidual exp_ln_gap_check(const Poset& p, const LinearExtension& sigma, Element i,
                               std::size_t samples, std::uint64_t seed) {
  if (i >= p.size()) throw IndexError("element out of range");
  if (samples < 2) throw ValueError("need at least two samples");
  const DVector d = d_vector(p, sigma);
  const std::vector<Element> preds = p.predecessors(i);
  std::mt19937_64 rng(seed);
  double mean = 0.0, m2 = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const OrderPoint y = PolytopeSampler::order_point_in(sigma, rng);
    double gap = y(static_cast<Eigen::Index>(i));
    for (Element j : preds) gap = std::min(gap, y(static_cast<Eigen::Index>(i)) - y(static_cast<Eigen::Index>(j)));
    if (gap <= 0.0) {
      --s;
      continue;
    }
    const double v = std::log(gap);
    const double delta = v - mean;
    mean += delta / static_cast<double>(s + 1);
    m2 += delta * (v - mean);
  }
  ExpLnResidual out;
  out.estimate = mean;
  out.std_error = std::sqrt(m2 / static_cast<double>(samples - 1) / static_cast<double>(samples));
  const mpq_class target = harmonic(d[i] - 1) - harmonic(p.size());
  out.target = nearest_double(target);
  out.residual = std::abs(out.estimate - out.target);
  return out;
}

}  // namespace posetbounds
