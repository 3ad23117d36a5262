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
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace posetbounds {

using Element = std::size_t;
using Relation = std::pair<Element, Element>;
using RelationMatrix = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// Sequence of elements, each strictly below the next.
using Chain = std::vector<Element>;

/**
 * A finite poset on {0, ..., n-1}, stored as its strict, transitively closed
 * relation: less(i, j) holds iff i <_P j. Values are immutable once built.
 *
 * Indices are 0-based here; files and the CLI use 1-based indices and convert
 * at the I/O boundary.
 */
class Poset {
 public:
  /// Transitive closure of `relations` (0-based pairs meaning i < j).
  /// Throws IndexError for out-of-range elements and CycleError when the
  /// closure is not antisymmetric (including i == j).
  static Poset from_relations(std::size_t n, std::span<const Relation> relations);

  static Poset chain(std::size_t n);
  static Poset antichain(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  bool less(Element i, Element j) const { return less_(i, j); }
  bool comparable(Element i, Element j) const {
    return less_(i, j) || less_(j, i);
  }
  bool is_minimal(Element i) const;
  bool is_maximal(Element i) const;

  const RelationMatrix& relation() const noexcept { return less_; }
  std::size_t relation_size() const { return less_.count(); }

  /// All strict pairs i < j, lexicographically ordered.
  std::vector<Relation> relation_pairs() const;
  /// Transitive reduction (Hasse diagram edges), lexicographically ordered.
  std::vector<Relation> cover_pairs() const;

  std::vector<Element> predecessors(Element i) const;
  std::vector<Element> upper_covers(Element i) const;

  /// Bit j of predecessor_mask(i) is set iff j < i. Requires size() <= 64.
  std::uint64_t predecessor_mask(Element i) const;

  /// The poset with element i renamed perm[i].
  Poset relabeled(std::span<const Element> perm) const;

  /// Induced subposet on `elems`, renumbered in the given order.
  Poset induced(std::span<const Element> elems) const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.n_ == b.n_ && (a.less_ == b.less_).all();
  }

 private:
  explicit Poset(RelationMatrix closed);

  std::size_t n_ = 0;
  RelationMatrix less_;
  std::vector<std::uint64_t> pred_masks_;
};

/// Validating construction entry point (0-based pairs).
Poset build_poset(std::size_t n, std::span<const Relation> relations);

/// Every maximal chain exactly once, as root-to-leaf paths of the Hasse
/// diagram, ordered by DFS from minimal elements in index order.
/// Exponential in the worst case; intended for n <= 20.
std::vector<Chain> maximal_chains(const Poset& p);

/// True iff every relation of `p` also holds in `q`.
bool extends(const Poset& q, const Poset& p);

/// Number of 4-element subsets inducing a subposet isomorphic to N
/// (a < b, c < b, c < d, nothing else).
std::size_t count_induced_N(const Poset& p);

}  // namespace posetbounds
