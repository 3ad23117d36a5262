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

#include "posetbounds/poset.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "posetbounds/errors.hpp"

namespace posetbounds {

Poset::Poset(RelationMatrix closed)
    : n_(static_cast<std::size_t>(closed.rows())), less_(std::move(closed)) {
  if (n_ <= 64) {
    pred_masks_.assign(n_, 0);
    for (Element j = 0; j < n_; ++j) {
      for (Element i = 0; i < n_; ++i) {
        if (less_(i, j)) pred_masks_[j] |= std::uint64_t{1} << i;
      }
    }
  }
}

Poset Poset::from_relations(std::size_t n, std::span<const Relation> relations) {
  if (n == 0) throw ValueError("poset must have at least one element");
  RelationMatrix rel = RelationMatrix::Constant(n, n, false);
  for (const auto& [i, j] : relations) {
    if (i >= n || j >= n) {
      throw IndexError("element out of range in pair (" + std::to_string(i + 1) +
                       ", " + std::to_string(j + 1) + ") for n = " +
                       std::to_string(n));
    }
    if (i == j) {
      throw CycleError("reflexive pair (" + std::to_string(i + 1) + ", " +
                       std::to_string(i + 1) + ")");
    }
    rel(i, j) = true;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!rel(i, k)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (rel(k, j)) rel(i, j) = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (rel(i, i)) {
      throw CycleError("relation contains a directed cycle through element " +
                       std::to_string(i + 1));
    }
  }
  return Poset(std::move(rel));
}

Poset Poset::chain(std::size_t n) {
  std::vector<Relation> pairs;
  for (Element i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return from_relations(n, pairs);
}

Poset Poset::antichain(std::size_t n) { return from_relations(n, {}); }

bool Poset::is_minimal(Element i) const { return !less_.col(i).any(); }

bool Poset::is_maximal(Element i) const { return !less_.row(i).any(); }

std::vector<Relation> Poset::relation_pairs() const {
  std::vector<Relation> out;
  for (Element i = 0; i < n_; ++i) {
    for (Element j = 0; j < n_; ++j) {
      if (less_(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<Relation> Poset::cover_pairs() const {
  std::vector<Relation> out;
  for (Element i = 0; i < n_; ++i) {
    for (Element j = 0; j < n_; ++j) {
      if (!less_(i, j)) continue;
      bool covered = true;
      for (Element k = 0; k < n_ && covered; ++k) {
        if (less_(i, k) && less_(k, j)) covered = false;
      }
      if (covered) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<Element> Poset::predecessors(Element i) const {
  std::vector<Element> out;
  for (Element j = 0; j < n_; ++j) {
    if (less_(j, i)) out.push_back(j);
  }
  return out;
}

std::vector<Element> Poset::upper_covers(Element i) const {
  std::vector<Element> out;
  for (Element j = 0; j < n_; ++j) {
    if (!less_(i, j)) continue;
    bool covered = true;
    for (Element k = 0; k < n_ && covered; ++k) {
      if (less_(i, k) && less_(k, j)) covered = false;
    }
    if (covered) out.push_back(j);
  }
  return out;
}

std::uint64_t Poset::predecessor_mask(Element i) const {
  if (n_ > 64) throw LimitExceeded("bitmask operations need n <= 64");
  return pred_masks_[i];
}

Poset Poset::relabeled(std::span<const Element> perm) const {
  if (perm.size() != n_) throw SizeMismatch("permutation size differs from poset size");
  RelationMatrix rel = RelationMatrix::Constant(n_, n_, false);
  for (Element i = 0; i < n_; ++i) {
    for (Element j = 0; j < n_; ++j) {
      if (less_(i, j)) rel(perm[i], perm[j]) = true;
    }
  }
  return Poset(std::move(rel));
}

Poset Poset::induced(std::span<const Element> elems) const {
  const std::size_t m = elems.size();
  RelationMatrix rel = RelationMatrix::Constant(m, m, false);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) rel(a, b) = less_(elems[a], elems[b]);
  }
  return Poset(std::move(rel));
}

Poset build_poset(std::size_t n, std::span<const Relation> relations) {
  return Poset::from_relations(n, relations);
}

namespace {

void extend_chains(const Poset& p, const std::vector<std::vector<Element>>& covers,
                   Chain& path, std::vector<Chain>& out) {
  const auto& next = covers[path.back()];
  if (next.empty()) {
    out.push_back(path);
    return;
  }
  for (Element j : next) {
    path.push_back(j);
    extend_chains(p, covers, path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<Chain> maximal_chains(const Poset& p) {
  std::vector<std::vector<Element>> covers(p.size());
  for (Element i = 0; i < p.size(); ++i) covers[i] = p.upper_covers(i);
  std::vector<Chain> out;
  Chain path;
  for (Element i = 0; i < p.size(); ++i) {
    if (!p.is_minimal(i)) continue;
    path.assign(1, i);
    extend_chains(p, covers, path, out);
  }
  return out;
}

bool extends(const Poset& q, const Poset& p) {
  if (q.size() != p.size()) {
    throw SizeMismatch("extends: posets have " + std::to_string(q.size()) +
                       " and " + std::to_string(p.size()) + " elements");
  }
  return !(p.relation() && !q.relation()).any();
}

std::size_t count_induced_N(const Poset& p) {
  // A 4-subset induces N iff its comparability graph is a path on 4 vertices:
  // transitivity forces the zigzag orientation, and N is self-dual.
  const std::size_t n = p.size();
  std::size_t count = 0;
  std::array<Element, 4> v{};
  for (v[0] = 0; v[0] < n; ++v[0]) {
    for (v[1] = v[0] + 1; v[1] < n; ++v[1]) {
      for (v[2] = v[1] + 1; v[2] < n; ++v[2]) {
        for (v[3] = v[2] + 1; v[3] < n; ++v[3]) {
          std::array<int, 4> degree{};
          int edges = 0;
          for (int a = 0; a < 4; ++a) {
            for (int b = a + 1; b < 4; ++b) {
              if (p.comparable(v[a], v[b])) {
                ++edges;
                ++degree[a];
                ++degree[b];
              }
            }
          }
          if (edges != 3) continue;
          std::sort(degree.begin(), degree.end());
          if (degree == std::array<int, 4>{1, 1, 2, 2}) ++count;
        }
      }
    }
  }
  return count;
}

}  // namespace posetbounds
