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

#include "posetbounds/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include "posetbounds/errors.hpp"

namespace posetbounds {

EntropySolution entropy(const Poset& p, double tol, std::size_t newton_cap) {
  if (!(tol > 0)) throw ValueError("entropy tolerance must be positive");
  const auto n = static_cast<Eigen::Index>(p.size());
  const auto chains = maximal_chains(p);
  const auto m = static_cast<Eigen::Index>(chains.size());
  const double inv_n = 1.0 / static_cast<double>(n);

  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m, n);
  std::size_t longest = 0;
  for (Eigen::Index c = 0; c < m; ++c) {
    for (Element e : chains[c]) A(c, static_cast<Eigen::Index>(e)) = 1.0;
    longest = std::max(longest, chains[c].size());
  }

  // Strictly interior start.
  Eigen::VectorXd z = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(longest + 1));
  double t = static_cast<double>(n);
  constexpr double kGrowth = 10.0;

  EntropySolution out;
  double lower = 0.0;
  Eigen::LDLT<Eigen::MatrixXd> ldlt;
  for (;;) {
    // Centering. Near the boundary the slacks lose digits to cancellation, so
    // stop once the decrement no longer shrinks.
    double previous = std::numeric_limits<double>::infinity();
    for (;;) {
      const Eigen::VectorXd slack = Eigen::VectorXd::Ones(m) - A * z;
      const Eigen::VectorXd inv_s = slack.cwiseInverse();
      const Eigen::VectorXd grad = -t * inv_n * z.cwiseInverse() + A.transpose() * inv_s;
      Eigen::MatrixXd hess = A.transpose() * inv_s.cwiseAbs2().asDiagonal() * A;
      hess.diagonal() += t * inv_n * z.cwiseInverse().cwiseAbs2();
      ldlt.compute(hess);
      const Eigen::VectorXd step = -ldlt.solve(grad);
      const double decrement2 = -grad.dot(step);
      if (!(decrement2 > 1e-18) || (decrement2 < 1e-8 && decrement2 >= previous)) break;
      previous = decrement2;
      if (++out.newton_steps > newton_cap) {
        throw NonConvergence("entropy: Newton step cap of " + std::to_string(newton_cap) +
                             " reached");
      }
      const double decrement = std::sqrt(decrement2);
      double alpha = decrement > 0.25 ? 1.0 / (1.0 + decrement) : 1.0;
      // Rounding can still push a tight slack out of the domain.
      while (((z + alpha * step).minCoeff() <= 0.0 ||
              (A * (z + alpha * step)).maxCoeff() >= 1.0) &&
             alpha > 1e-16) {
        alpha *= 0.5;
      }
      z += alpha * step;
      if (decrement2 < 1e-14) break;
    }

    // Any nonnegative multiplier gives a lower bound through the dual
    //   g(lambda) = (1/n) sum ln(n (A^T lambda)_i) + 1 - 1^T lambda,
    // so the gap below is a certificate even with inexact slacks. Rescaling
    // lambda by 1 / 1^T lambda maximizes g along the ray.
    const Eigen::VectorXd slack = Eigen::VectorXd::Ones(m) - A * z;
    Eigen::VectorXd dual = (t * slack).cwiseInverse();
    dual /= dual.sum();
    const double primal = -inv_n * z.array().log().sum();
    lower = inv_n * (static_cast<double>(n) * (A.transpose() * dual).array()).log().sum();
    out.kkt_residual = std::max(0.0, primal - lower);
    if (out.kkt_residual <= tol) break;
    t *= kGrowth;
  }

  // The central point keeps a slack of about m/t on every chain. Scaling up
  // until the tightest chain is saturated raises every coordinate, so the
  // objective only improves.
  z /= (A * z).maxCoeff();
  out.kkt_residual = std::max(0.0, -inv_n * z.array().log().sum() - lower);

  if (z.minCoeff() < 1e-9) {
    throw NonConvergence("entropy: minimizer coordinate collapsed below 1e-9");
  }
  out.z_star = z;
  out.H = std::max(0.0, -inv_n * z.array().log().sum());  // z <= 1, so H >= 0
  return out;
}

double lb(const Poset& p, double tol) {
  const double n = static_cast<double>(p.size());
  // H(P) <= ln n because the uniform point 1/n is feasible; the clamp only
  // removes rounding.
  return std::max(0.0, n * (std::log(n) - entropy(p, tol).H));
}

}  // namespace posetbounds
