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
#include <vector>

#include <gmpxx.h>

#include "posetbounds/linext.hpp"
#include "posetbounds/polytopes.hpp"
#include "posetbounds/poset.hpp"
#include "posetbounds/sp_expr.hpp"

namespace posetbounds {

/// d[i] = sigma(i) for minimal i, else sigma(i) minus the highest predecessor
/// rank. Always 1 <= d[i] <= sigma(i).
using DVector = std::vector<std::size_t>;

DVector d_vector(const Poset& p, const LinearExtension& sigma);

/// E_sigma[ sum_i H_{d_i(sigma) - 1} ] over all linear extensions, exact.
mpq_class qlb_enum(const Poset& p, std::size_t cap = kDefaultEnumerationCap);

/// H_n - QLB(P)/n, exact.
mpq_class qh_exact(const Poset& p, std::size_t cap = kDefaultEnumerationCap);

/// Monte Carlo mean of -(1/n) sum ln z_i over uniform z in C(P).
McEstimate qh_mc(const Poset& p, std::size_t samples, std::uint64_t seed);

/// QLB from the composition rules: series adds, parallel adds
/// n H_n - n1 H_{n1} - n2 H_{n2}; n-ary nodes fold left. Throws
/// UnsupportedNBlock.
mpq_class qlb_sp(const SpExpr& e);

struct NkBounds {
  double itlb_lo = 0.0;  ///< ln C(2k, k)
  double itlb_hi = 0.0;  ///< ln C(4k, 2k)
  mpq_class qlb_lo;      ///< 2 (2k H_{2k} - 2k H_k)
};

NkBounds nk_bounds(std::size_t k);

/// (n1+n2) H_{n1+n2} - n1 H_{n1} - n2 H_{n2}, exact.
mpq_class composition_gain(std::size_t n1, std::size_t n2);

/// composition_gain(n1, n2) / ln C(n1+n2, n1).
double tech_ratio(std::size_t n1, std::size_t n2);

struct TechConstant {
  double c_min = 0.0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
};

/// Minimum of tech_ratio over 1 <= n1 <= n2 <= max_n. `visit`, when set,
/// receives every (n1, n2, ratio) in scan order.
TechConstant tech_constant(
    std::size_t max_n,
    const std::function<void(std::size_t, std::size_t, double)>& visit = {});

}  // namespace posetbounds
