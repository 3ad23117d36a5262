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
#include <random>
#include <string>
#include <vector>

#include "posetbounds/poset.hpp"
#include "posetbounds/sp_expr.hpp"

namespace posetbounds {

/// Random labeled poset: each pair of a hidden random total order becomes a
/// relation with probability `density`, then the closure is taken.
Poset random_poset(std::size_t n, double density, std::mt19937_64& rng);

/// Random series-parallel expression on exactly n elements built from
/// random binary splits (flattened).
SpExpr random_sp_expr(std::size_t n, std::mt19937_64& rng);

struct NamedPoset {
  std::string name;
  Poset poset;
  std::optional<SpExpr> expr;  ///< set when the poset came from an expression
};

/// Small hand-picked posets: the 3-element example with one relation, N,
/// N_2, the 7-element series-parallel example, chains, antichains, trees.
std::vector<NamedPoset> named_posets();

/// named_posets() plus `random_count` random posets with 2 <= n <= max_n.
std::vector<NamedPoset> test_family(std::uint64_t seed, std::size_t random_count,
                                    std::size_t max_n);

/// Every labeled poset on n elements (n <= 5).
std::vector<Poset> all_posets(std::size_t n);

}  // namespace posetbounds
