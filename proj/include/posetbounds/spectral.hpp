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
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "posetbounds/errors.hpp"

namespace posetbounds {

inline constexpr double kDefaultNormTol = 1e-9;
inline constexpr std::size_t kDefaultPowerIterations = 200'000;

struct NormEstimate {
  double value = 0.0;  ///< Rayleigh quotient at the final iterate
  double lower = 0.0;  ///< ||M x|| for the unit iterate x
  /// Collatz-Wielandt bound max_i (Mx)_i / x_i; +inf when M has a negative
  /// entry (the bound then does not apply).
  double upper = std::numeric_limits<double>::infinity();
  std::size_t iterations = 0;
};

namespace detail {

template <typename Derived>
bool has_negative_entry(const Eigen::MatrixBase<Derived>& m) {
  return (m.array() < 0).any();
}

template <typename Derived>
bool has_negative_entry(const Eigen::SparseMatrixBase<Derived>& m) {
  const auto& d = m.derived();
  for (Eigen::Index k = 0; k < d.outerSize(); ++k) {
    for (typename Derived::InnerIterator it(d, k); it; ++it) {
      if (it.value() < 0) return true;
    }
  }
  return false;
}

}  // namespace detail

/**
 * Largest eigenvalue of a symmetric matrix by power iteration, which for a
 * nonnegative symmetric matrix is its spectral norm.
 *
 * Iterates x <- (M + I) x from a positive seeded start: the identity shift
 * keeps the Perron root strictly dominant even when the spectrum is
 * symmetric about zero (bipartite adversary masks). Stops once the Rayleigh
 * quotient changes by less than `tol` relative and the Collatz-Wielandt
 * bracket has closed to within 1e3 * tol.
 */
template <typename MatrixType>
NormEstimate spectral_norm(const MatrixType& m, double tol = kDefaultNormTol,
                           std::size_t max_iterations = kDefaultPowerIterations,
                           std::uint64_t seed = 42) {
  const Eigen::Index dim = m.rows();
  NormEstimate est;
  if (dim == 0) return est;
  const bool nonnegative = !detail::has_negative_entry(m);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> start(0.5, 1.5);
  Eigen::VectorXd x(dim);
  for (Eigen::Index i = 0; i < dim; ++i) x(i) = start(rng);
  x.normalize();

  Eigen::VectorXd mx = m * x;
  double previous = x.dot(mx);
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    x = mx + x;
    const double norm = x.norm();
    if (norm == 0.0) break;
    x /= norm;
    mx = m * x;
    est.iterations = it;
    est.value = x.dot(mx);
    est.lower = mx.norm();
    if (nonnegative) {
      double upper = 0.0;
      for (Eigen::Index i = 0; i < dim; ++i) {
        if (x(i) > 0.0) upper = std::max(upper, mx(i) / x(i));
      }
      est.upper = upper;
    }
    if (est.lower == 0.0) return est;  // zero matrix
    const bool settled = std::abs(est.value - previous) <= tol * std::abs(est.value);
    const bool bracketed =
        !nonnegative || est.upper - est.value <= 1e3 * tol * std::abs(est.value);
    if (settled && bracketed) return est;
    previous = est.value;
  }
  throw NonConvergence("power iteration did not converge within " +
                       std::to_string(max_iterations) + " iterations");
}

/// A(k, l) = 1 / (k + l - 1), 1-based.
Eigen::MatrixXd hilbert_matrix(std::size_t m);

NormEstimate hilbert_norm(std::size_t m, double tol = kDefaultNormTol);

}  // namespace posetbounds
