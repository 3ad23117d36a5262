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

#include "posetbounds/polytopes.hpp"
#include "posetbounds/poset.hpp"

namespace posetbounds {

inline constexpr double kDefaultEntropyTol = 1e-8;
inline constexpr std::size_t kDefaultNewtonCap = 1000;

struct EntropySolution {
  double H = 0.0;  ///< nats
  ChainPoint z_star;
  /// max(duality gap, dual stationarity residual) at the returned point.
  double kkt_residual = 0.0;
  std::size_t newton_steps = 0;
};

/**
 * Minimizes -(1/n) sum ln z_i over the chain polytope, i.e. maximizes the
 * volume of an origin-anchored box inside C(P).
 *
 * Log-barrier on the maximal-chain inequalities with damped Newton centering
 * (the barrier objective is self-concordant once t >= n, so the step
 * 1/(1 + decrement) stays feasible without a line search). Stops when
 * max(gap, stationarity) <= tol. Throws ValueError for tol <= 0 and
 * NonConvergence when the Newton cap is reached or a coordinate of the
 * minimizer collapses below 1e-9.
 */
EntropySolution entropy(const Poset& p, double tol = kDefaultEntropyTol,
                        std::size_t newton_cap = kDefaultNewtonCap);

/// n (ln n - H(P)).
double lb(const Poset& p, double tol = kDefaultEntropyTol);

}  // namespace posetbounds
