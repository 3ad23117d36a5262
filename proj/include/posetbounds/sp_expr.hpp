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
#include <string_view>
#include <vector>

#include "posetbounds/poset.hpp"

namespace posetbounds {

/**
 * Series-parallel expression tree. Series and Parallel nodes are n-ary with at
 * least two children and never have a child of their own kind, so every
 * expression has one flattened normal form.
 *
 * Elements are numbered by the left-to-right order of leaves; an NBlock(k)
 * contributes 4k consecutive elements laid out as chains A, B, C, D.
 */
class SpExpr {
 public:
  enum class Kind { Singleton, Series, Parallel, NBlock };

  static SpExpr singleton();
  /// Flattens nested series children; a single child is returned as is.
  static SpExpr series(std::vector<SpExpr> children);
  static SpExpr parallel(std::vector<SpExpr> children);
  static SpExpr nblock(std::size_t k);
  static SpExpr chain(std::size_t k);
  static SpExpr antichain(std::size_t k);

  Kind kind() const noexcept { return kind_; }
  std::size_t block_size() const noexcept { return block_; }
  const std::vector<SpExpr>& children() const noexcept { return children_; }

  /// Number of elements of the realized poset.
  std::size_t size() const noexcept { return size_; }
  bool has_nblock() const;

  /// Canonical text in the parser's grammar.
  std::string to_string() const;

  friend bool operator==(const SpExpr&, const SpExpr&) = default;

 private:
  SpExpr(Kind kind, std::size_t block, std::vector<SpExpr> children);

  Kind kind_ = Kind::Singleton;
  std::size_t block_ = 0;
  std::vector<SpExpr> children_;
  std::size_t size_ = 1;
};

/**
 * Grammar (whitespace insignificant):
 *   parallel := series ('+' series)*
 *   series   := atom ('*' atom)*
 *   atom     := '.' | '(' parallel ')' | 'N(' k ')' | 'chain(' k ')'
 *             | 'antichain(' k ')'
 * Throws ParseError carrying the character offset, ValueError for k < 1.
 */
SpExpr parse_sp(std::string_view text);

Poset realize(const SpExpr& e);

/// A decomposition of a poset: realize(expr) relabeled by leaf i -> leaves[i]
/// reproduces the input poset exactly.
struct SpDecomposition {
  SpExpr expr;
  std::vector<Element> leaves;
};

/// Modular split on the comparability graph; nullopt when the poset is not
/// series-parallel. Never produces NBlock nodes.
std::optional<SpDecomposition> recognize_sp(const Poset& p);

}  // namespace posetbounds
