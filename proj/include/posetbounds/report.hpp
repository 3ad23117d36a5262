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
#include <optional>
#include <string>

#include <gmpxx.h>
#include "json.hpp"

#include "posetbounds/adversary.hpp"
#include "posetbounds/entropy.hpp"
#include "posetbounds/linext.hpp"
#include "posetbounds/poset.hpp"

namespace posetbounds {

struct AnalyzeOptions {
  double entropy_tol = kDefaultEntropyTol;
  std::size_t max_elements = kDefaultMaxElements;
  std::size_t enumeration_cap = kDefaultEnumerationCap;
  std::size_t matrix_cap = kDefaultMatrixCap;
};

/// Classical and quantum bounds for one poset. Adversary fields are empty when
/// |Delta(P)| exceeds the matrix cap.
struct BoundsReport {
  std::size_t n = 0;
  mpz_class num_extensions;
  double itlb = 0.0;
  double entropy = 0.0;
  double lb = 0.0;
  double qlb = 0.0;
  double qh = 0.0;
  std::optional<double> gamma_norm;
  std::optional<double> max_gamma_ij_norm;
  std::optional<bool> lemma1_ok;
  std::optional<bool> lemma2_ok;
  std::optional<bool> lemma3_ok;
  bool sandwich_ok = false;

  /// True when no computed lemma flag is false.
  bool all_ok() const;
};

inline constexpr double kSandwichTol = 1e-6;

BoundsReport analyze(const Poset& p, const AnalyzeOptions& options = {});

/// Flat object with keys n, num_extensions, itlb, entropy, lb, qlb, qh,
/// gamma_norm, max_gamma_ij_norm, lemma1_ok, lemma2_ok, lemma3_ok,
/// sandwich_ok (in that order; absent values are null).
nlohmann::ordered_json to_json(const BoundsReport& report);

/// "key,value" lines with a header row.
std::string to_csv(const BoundsReport& report);
/// "key: value" lines.
std::string to_text(const BoundsReport& report);

}  // namespace posetbounds
