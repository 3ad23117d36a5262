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
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include <Eigen/SparseCore>
#include <gmpxx.h>

#include "posetbounds/linext.hpp"
#include "posetbounds/poset.hpp"
#include "posetbounds/spectral.hpp"

namespace posetbounds {

inline constexpr std::size_t kDefaultMatrixCap = 4000;
inline constexpr double kAdversaryRelTol = 1e-6;

/**
 * Symmetric nonnegative matrix on pairs of linear extensions. Rows follow
 * the lexicographic enumeration order. Masked copies (gamma_ij) share the
 * extension list with the matrix they came from.
 */
struct AdversaryMatrix {
  std::shared_ptr<const std::vector<LinearExtension>> extensions;
  std::shared_ptr<const std::map<std::vector<Element>, std::size_t>> index;
  Eigen::SparseMatrix<double> entries;

  std::size_t dim() const { return extensions ? extensions->size() : 0; }
  std::optional<std::size_t> index_of(const LinearExtension& sigma) const;
  double at(std::size_t row, std::size_t col) const { return entries.coeff(row, col); }
};

/**
 * Gamma(sigma, tau) = Gamma(tau, sigma) = 1/d whenever tau moves one element
 * of sigma down by d positions. The move of element i by d stays inside
 * Delta(P) exactly when d <= d_i(sigma) - 1, so no membership test is needed.
 * Throws LimitExceeded above `cap` extensions.
 */
AdversaryMatrix build_adversary(const Poset& p, std::size_t cap = kDefaultMatrixCap);

/// Keeps the entries whose extensions disagree on the order of i and j.
AdversaryMatrix gamma_ij(const AdversaryMatrix& gamma, Element i, Element j);

struct AdversaryCertificate {
  mpq_class qlb;
  NormEstimate gamma_norm;
  NormEstimate max_gamma_ij;  ///< the pair attaining the largest value
  Element argmax_i = 0;
  Element argmax_j = 0;
  /// v^T Gamma v for the uniform unit vector.
  double uniform_rayleigh = 0.0;
  bool lemma1_ok = false;  ///< ||Gamma|| >= QLB
  bool lemma2_ok = false;  ///< max ||Gamma^{ij}|| <= 2 pi
  bool lemma3_ok = false;  ///< ||Gamma|| / max ||Gamma^{ij}|| >= QLB / (2 pi)
};

/// Relative tolerance `rel_tol` on all three comparisons.
AdversaryCertificate verify_adversary(const Poset& p, std::size_t cap = kDefaultMatrixCap,
                                      double rel_tol = kAdversaryRelTol,
                                      double norm_tol = kDefaultNormTol);

}  // namespace posetbounds
