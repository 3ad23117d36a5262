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
#include <vector>

#include <Eigen/Core>

#include "posetbounds/errors.hpp"
#include "posetbounds/linext.hpp"
#include "posetbounds/poset.hpp"

namespace posetbounds {

/// Point of the order polytope O(P): coordinates in [0,1], monotone along P.
using OrderPoint = Eigen::VectorXd;
/// Point of the chain polytope C(P): nonnegative, every chain sums to <= 1.
using ChainPoint = Eigen::VectorXd;

inline constexpr double kFeasibilityTol = 1e-12;

/// Monte Carlo estimate with its standard error.
struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

template <typename Derived>
bool in_order_polytope(const Poset& p, const Eigen::MatrixBase<Derived>& y,
                       double tol = kFeasibilityTol) {
  if (static_cast<std::size_t>(y.size()) != p.size()) return false;
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (!(y(i) >= -tol && y(i) <= 1 + tol)) return false;
  }
  for (const auto& [i, j] : p.cover_pairs()) {
    if (y(i) > y(j) + tol) return false;
  }
  return true;
}

template <typename Derived>
bool in_chain_polytope(const std::vector<Chain>& chains, const Eigen::MatrixBase<Derived>& z,
                       double tol = kFeasibilityTol) {
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    if (!(z(i) >= -tol)) return false;
  }
  for (const auto& c : chains) {
    typename Derived::Scalar sum(0);
    for (Element e : c) sum += z(e);
    if (sum > 1 + tol) return false;
  }
  return true;
}

template <typename Derived>
bool in_chain_polytope(const Poset& p, const Eigen::MatrixBase<Derived>& z,
                       double tol = kFeasibilityTol) {
  return static_cast<std::size_t>(z.size()) == p.size() &&
         in_chain_polytope(maximal_chains(p), z, tol);
}

/**
 * Stanley's transfer map O(P) -> C(P): a minimal element keeps its
 * coordinate, any other element gets its gap above the highest strict
 * predecessor. Throws NotConsistent when y is outside O(P).
 */
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> transfer(
    const Poset& p, const Eigen::MatrixBase<Derived>& y) {
  using Scalar = typename Derived::Scalar;
  if (!in_order_polytope(p, y)) throw NotConsistent("point is not in the order polytope");
  const auto n = static_cast<Eigen::Index>(p.size());
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> z(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Scalar below(0);
    for (Eigen::Index j = 0; j < n; ++j) {
      if (p.less(j, i) && y(j) > below) below = y(j);
    }
    z(i) = y(i) - below;
  }
  return z;
}

/// Inverse transfer: y[i] = z[i] + max over strict predecessors of y
/// (0 for minimal elements), evaluated in a topological order.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> transfer_inverse(
    const Poset& p, const Eigen::MatrixBase<Derived>& z) {
  using Scalar = typename Derived::Scalar;
  if (!in_chain_polytope(p, z)) throw NotInChainPolytope("point is not in the chain polytope");
  const auto n = static_cast<Eigen::Index>(p.size());
  // Predecessor count is a topological key: j < i implies fewer predecessors.
  std::vector<Eigen::Index> topo(n);
  for (Eigen::Index i = 0; i < n; ++i) topo[i] = i;
  std::stable_sort(topo.begin(), topo.end(), [&](Eigen::Index a, Eigen::Index b) {
    return p.relation().col(a).count() < p.relation().col(b).count();
  });
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> y(n);
  for (Eigen::Index i : topo) {
    Scalar below(0);
    for (Eigen::Index j = 0; j < n; ++j) {
      if (p.less(j, i) && y(j) > below) below = y(j);
    }
    y(i) = z(i) + below;
  }
  return y;
}

/**
 * Exact uniform sampling of O(P) and C(P). A uniform linear extension picks
 * the simplex O(sigma); sorted uniforms give the uniform point inside it; the
 * transfer map carries it to C(P) preserving volume.
 */
class PolytopeSampler {
 public:
  explicit PolytopeSampler(const Poset& p, std::size_t max_elements = kDefaultMaxElements)
      : counter_(p, max_elements) {}

  const Poset& poset() const noexcept { return counter_.poset(); }
  const ExtensionCounter& counter() const noexcept { return counter_; }

  OrderPoint order_point(std::mt19937_64& rng) const;
  /// Uniform point of O(sigma) for a fixed extension.
  static OrderPoint order_point_in(const LinearExtension& sigma, std::mt19937_64& rng);
  ChainPoint chain_point(std::mt19937_64& rng) const;

 private:
  ExtensionCounter counter_;
};

OrderPoint sample_order_point(const Poset& p, std::uint64_t seed);
ChainPoint sample_chain_point(const Poset& p, std::uint64_t seed);

/// Hit-or-miss estimate of vol C(P) over the unit cube (binomial stderr).
McEstimate chain_polytope_volume_mc(const Poset& p, std::size_t samples, std::uint64_t seed);

}  // namespace posetbounds
