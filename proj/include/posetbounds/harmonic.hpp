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
#include <deque>

#include <gmpxx.h>

namespace posetbounds {

/// Exact harmonic numbers H_q = sum_{i=1}^q 1/i, H_0 = 0, cached on demand.
/// Returned references stay valid as the table grows.
class HarmonicTable {
 public:
  HarmonicTable() : values_{mpq_class(0)} {}

  const mpq_class& operator[](std::size_t q) {
    while (values_.size() <= q) {
      values_.push_back(values_.back() + mpq_class(1, values_.size()));
    }
    return values_[q];
  }

  std::size_t cached() const noexcept { return values_.size(); }

 private:
  std::deque<mpq_class> values_;
};

/// H_q from a thread-local table.
const mpq_class& harmonic(std::size_t q);

/// Correctly rounded conversion (mpq_get_d truncates).
double nearest_double(const mpq_class& q);

}  // namespace posetbounds
