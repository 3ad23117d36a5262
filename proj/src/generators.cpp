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

#include "posetbounds/generators.hpp"

#include <algorithm>
#include <numeric>

#include "posetbounds/errors.hpp"

namespace posetbounds {

Poset random_poset(std::size_t n, double density, std::mt19937_64& rng) {
  std::vector<Element> hidden(n);
  std::iota(hidden.begin(), hidden.end(), Element{0});
  std::shuffle(hidden.begin(), hidden.end(), rng);
  std::bernoulli_distribution keep(density);
  std::vector<Relation> pairs;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (keep(rng)) pairs.emplace_back(hidden[a], hidden[b]);
    }
  }
  return build_poset(n, pairs);
}

SpExpr random_sp_expr(std::size_t n, std::mt19937_64& rng) {
  if (n == 0) throw ValueError("random_sp_expr needs n >= 1");
  if (n == 1) return SpExpr::singleton();
  std::uniform_int_distribution<std::size_t> split(1, n - 1);
  const std::size_t left = split(rng);
  std::vector<SpExpr> parts;
  parts.push_back(random_sp_expr(left, rng));
  parts.push_back(random_sp_expr(n - left, rng));
  return std::bernoulli_distribution(0.5)(rng) ? SpExpr::series(std::move(parts))
                                               : SpExpr::parallel(std::move(parts));
}

std::vector<NamedPoset> named_posets() {
  std::vector<NamedPoset> out;
  auto from_expr = [&](const std::string& text) {
    SpExpr e = parse_sp(text);
    out.push_back({text, realize(e), e});
  };
  // b < a with c isolated, elements (a, b, c) = (1, 2, 3).
  const std::vector<Relation> fig2{{1, 0}};
  out.push_back({"figure2", build_poset(3, fig2), std::nullopt});
  from_expr("N(1)");
  from_expr("N(2)");
  from_expr(". * (.+.+.) * (. + (. * .))");
  for (std::size_t k = 1; k <= 5; ++k) from_expr("chain(" + std::to_string(k) + ")");
  for (std::size_t k = 2; k <= 5; ++k) from_expr("antichain(" + std::to_string(k) + ")");
  from_expr("chain(3) + chain(3)");
  from_expr("(. + .) * (. + .)");
  from_expr("(. * .) + .");
  from_expr("chain(2) + chain(2) + .");
  from_expr(". * (. * (. + .) + . * (. + .))");
  from_expr("chain(5) + .");
  from_expr("N(1) + .");
  from_expr("N(1) * (. + .)");
  // Heap-ordered binary tree on 7 nodes.
  const std::vector<Relation> heap{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}};
  out.push_back({"heap7", build_poset(7, heap), std::nullopt});
  // 2x3 grid (product of chains), not series-parallel.
  const std::vector<Relation> grid{{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}};
  out.push_back({"grid2x3", build_poset(6, grid), std::nullopt});
  return out;
}

std::vector<NamedPoset> test_family(std::uint64_t seed, std::size_t random_count,
                                    std::size_t max_n) {
  std::vector<NamedPoset> out = named_posets();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(2, max_n);
  std::uniform_real_distribution<double> density(0.1, 0.7);
  for (std::size_t r = 0; r < random_count; ++r) {
    const std::size_t n = size(rng);
    out.push_back({"random" + std::to_string(r) + "_n" + std::to_string(n),
                   random_poset(n, density(rng), rng), std::nullopt});
  }
  return out;
}

std::vector<Poset> all_posets(std::size_t n) {
  if (n > 5) throw LimitExceeded("all_posets enumerates n <= 5 only");
  std::vector<Relation> slots;
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      if (i != j) slots.emplace_back(i, j);
    }
  }
  std::vector<Poset> out;
  std::vector<Relation> pairs;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    RelationMatrix rel = RelationMatrix::Constant(n, n, false);
    pairs.clear();
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (mask >> s & 1) {
        rel(slots[s].first, slots[s].second) = true;
        pairs.push_back(slots[s]);
      }
    }
    // Keep only relations that are already antisymmetric and transitive.
    bool ok = true;
    for (Element i = 0; i < n && ok; ++i) {
      for (Element j = 0; j < n && ok; ++j) {
        if (!rel(i, j)) continue;
        if (rel(j, i)) ok = false;
        for (Element k = 0; k < n && ok; ++k) {
          if (rel(j, k) && !rel(i, k)) ok = false;
        }
      }
    }
    if (ok) out.push_back(build_poset(n, pairs));
  }
  return out;
}

}  // namespace posetbounds
