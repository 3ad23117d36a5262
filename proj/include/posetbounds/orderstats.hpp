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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "posetbounds/linext.hpp"
#include "posetbounds/poset.hpp"

namespace posetbounds {

inline constexpr double kQuadratureTol = 1e-10;
/// Left cut-off of the ln t integrand; (0, eps) is integrated after t = e^{-u}.
inline constexpr double kLogSplit = 1e-6;
inline constexpr std::size_t kMinKsSamples = 10'000;

/// Exact binomial coefficient converted to double.
double binomial_coefficient(std::size_t n, std::size_t k);

/// f_{n,k}(s) = n C(n-1, k) s^k (1-s)^{n-k-1}: the Beta(k+1, n-k) density.
/// Throws DomainError unless 0 <= k < n and s in [0, 1].
double density_f(std::size_t n, std::size_t k, double s);

/// P[z <= s] for z ~ f_{n,k}, i.e. sum_{l=k+1}^n C(n,l) s^l (1-s)^{n-l}.
double density_f_cdf(std::size_t n, std::size_t k, double s);

/// Closed forms.
double integral_I_closed(std::size_t n, std::size_t k, double s);  ///< (1-s)^n
double integral_J_closed(std::size_t n, std::size_t k, double s);
double integral_H_closed(std::size_t n, std::size_t k);            ///< H_k - H_n

/// Adaptive Gauss-Kronrod evaluations of the defining integrals. Throw
/// QuadratureFailure when the error estimate exceeds kQuadratureTol.
double integral_I_quadrature(std::size_t n, std::size_t k, double s);
double integral_J_quadrature(std::size_t n, std::size_t k, double s);
double integral_H_quadrature(std::size_t n, std::size_t k);
double density_f_integral(std::size_t n, std::size_t k);

struct ClosedFormResiduals {
  std::optional<double> I;  ///< absent when k is outside 1..n
  std::optional<double> J;  ///< absent when k is outside 0..n-1
  std::optional<double> H;
};

/// |quadrature - closed form| for I, J and H at (n, k, s).
ClosedFormResiduals closed_form_checks(std::size_t n, std::size_t k, double s);

/// One-sample Kolmogorov-Smirnov distance of `samples` (sorted in place) to
/// a continuous CDF.
template <typename Cdf>
double ks_statistic(std::vector<double>& samples, Cdf cdf);

double ks_two_sample(std::vector<double> a, std::vector<double> b);

/// Asymptotic critical values c(alpha) sqrt(1/m) and
/// c(alpha) sqrt((m1+m2)/(m1 m2)), c(alpha) = sqrt(-ln(alpha/2)/2).
double ks_critical(std::size_t m, double alpha);
double ks_critical_two_sample(std::size_t m1, std::size_t m2, double alpha);

/// Sorted uniform samples z_1 <= ... <= z_n; the gap z_{i+d} - z_i (1-based,
/// with z_0 = 0) compared by KS distance against f_{n,d-1}.
double gap_distribution_check(std::size_t n, std::size_t i, std::size_t d, std::size_t samples,
                              std::uint64_t seed);

std::vector<double> sample_gaps(std::size_t n, std::size_t i, std::size_t d, std::size_t samples,
                                std::uint64_t seed);

struct ExpLnResidual {
  double residual = 0.0;  ///< |MC estimate - (H_{d_i(sigma)-1} - H_n)|
  double std_error = 0.0;
  double estimate = 0.0;
  double target = 0.0;
};

/// Monte Carlo E[ln d_i(y)] over uniform y in the simplex O(sigma).
ExpLnResidual exp_ln_gap_check(const Poset& p, const LinearExtension& sigma, Element i,
                               std::size_t samples, std::uint64_t seed);

// ---------------------------------------------------------------------------

template <typename Cdf>
double ks_statistic(std::vector<double>& samples, Cdf cdf) {
  std::sort(samples.begin(), samples.end());
  const double m = static_cast<double>(samples.size());
  double worst = 0.0;
  for (std::size_t r = 0; r < samples.size(); ++r) {
    const double f = cdf(samples[r]);
    worst = std::max({worst, static_cast<double>(r + 1) / m - f, f - static_cast<double>(r) / m});
  }
  return worst;
}

}  // namespace posetbounds
