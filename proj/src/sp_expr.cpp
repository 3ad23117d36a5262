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

#include "posetbounds/sp_expr.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "posetbounds/errors.hpp"

namespace posetbounds {

SpExpr::SpExpr(Kind kind, std::size_t block, std::vector<SpExpr> children)
    : kind_(kind), block_(block), children_(std::move(children)) {
  switch (kind_) {
    case Kind::Singleton:
      size_ = 1;
      break;
    case Kind::NBlock:
      size_ = 4 * block_;
      break;
    default:
      size_ = 0;
      for (const auto& c : children_) size_ += c.size();
  }
}

SpExpr SpExpr::singleton() { return SpExpr(Kind::Singleton, 0, {}); }

namespace {

SpExpr compose(SpExpr::Kind kind, std::vector<SpExpr> children,
               SpExpr (*make)(SpExpr::Kind, std::vector<SpExpr>)) {
  if (children.empty()) throw ValueError("composition needs at least one operand");
  if (children.size() == 1) return std::move(children.front());
  std::vector<SpExpr> flat;
  for (auto& c : children) {
    if (c.kind() == kind) {
      for (const auto& g : c.children()) flat.push_back(g);
    } else {
      flat.push_back(std::move(c));
    }
  }
  return make(kind, std::move(flat));
}

}  // namespace

SpExpr SpExpr::series(std::vector<SpExpr> children) {
  return compose(Kind::Series, std::move(children),
                 [](Kind k, std::vector<SpExpr> c) { return SpExpr(k, 0, std::move(c)); });
}

SpExpr SpExpr::parallel(std::vector<SpExpr> children) {
  return compose(Kind::Parallel, std::move(children),
                 [](Kind k, std::vector<SpExpr> c) { return SpExpr(k, 0, std::move(c)); });
}

SpExpr SpExpr::nblock(std::size_t k) {
  if (k < 1) throw ValueError("N(k) needs k >= 1");
  return SpExpr(Kind::NBlock, k, {});
}

SpExpr SpExpr::chain(std::size_t k) {
  if (k < 1) throw ValueError("chain(k) needs k >= 1");
  return series(std::vector<SpExpr>(k, singleton()));
}

SpExpr SpExpr::antichain(std::size_t k) {
  if (k < 1) throw ValueError("antichain(k) needs k >= 1");
  return parallel(std::vector<SpExpr>(k, singleton()));
}

bool SpExpr::has_nblock() const {
  if (kind_ == Kind::NBlock) return true;
  return std::any_of(children_.begin(), children_.end(),
                     [](const SpExpr& c) { return c.has_nblock(); });
}

std::string SpExpr::to_string() const {
  switch (kind_) {
    case Kind::Singleton:
      return ".";
    case Kind::NBlock:
      return "N(" + std::to_string(block_) + ")";
    case Kind::Series: {
      std::string out;
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) out += " * ";
        const auto& c = children_[i];
        if (c.kind() == Kind::Parallel) {
          out += "(" + c.to_string() + ")";
        } else {
          out += c.to_string();
        }
      }
      return out;
    }
    case Kind::Parallel: {
      std::string out;
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) out += " + ";
        out += children_[i].to_string();
      }
      return out;
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SpExpr parse() {
    SpExpr e = parse_parallel();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  SpExpr parse_parallel() {
    std::vector<SpExpr> terms;
    terms.push_back(parse_series());
    while (accept('+')) terms.push_back(parse_series());
    return SpExpr::parallel(std::move(terms));
  }

  SpExpr parse_series() {
    std::vector<SpExpr> factors;
    factors.push_back(parse_atom());
    while (accept('*')) factors.push_back(parse_atom());
    return SpExpr::series(std::move(factors));
  }

  std::size_t parse_count() {
    expect('(');
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    std::size_t value = 0;
    std::size_t digits = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > 1'000'000) {
        pos_ = start;
        fail("block size too large");
      }
      ++pos_;
      ++digits;
    }
    if (digits == 0) {
      pos_ = start;
      fail("expected an integer");
    }
    expect(')');
    if (negative || value < 1) throw ValueError("block size must be >= 1");
    return value;
  }

  SpExpr parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '.') {
      ++pos_;
      return SpExpr::singleton();
    }
    if (c == '(') {
      ++pos_;
      SpExpr inner = parse_parallel();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view word = text_.substr(start, pos_ - start);
      if (word == "N") return SpExpr::nblock(parse_count());
      if (word == "chain") return SpExpr::chain(parse_count());
      if (word == "antichain") return SpExpr::antichain(parse_count());
      pos_ = start;
      fail("unknown primitive '" + std::string(word) + "'");
    }
    fail("expected an operand");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SpExpr parse_sp(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Realization

namespace {

/// Appends the relations of `e` with elements offset by `base`.
void collect_relations(const SpExpr& e, Element base, std::vector<Relation>& out) {
  using Kind = SpExpr::Kind;
  switch (e.kind()) {
    case Kind::Singleton:
      return;
    case Kind::NBlock: {
      const std::size_t k = e.block_size();
      const Element a = base, b = base + k, c = base + 2 * k, d = base + 3 * k;
      for (Element chain_start : {a, b, c, d}) {
        for (std::size_t i = 0; i + 1 < k; ++i) out.emplace_back(chain_start + i, chain_start + i + 1);
      }
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          out.emplace_back(a + i, b + j);
          out.emplace_back(c + i, b + j);
          out.emplace_back(c + i, d + j);
        }
      }
      return;
    }
    case Kind::Parallel: {
      Element offset = base;
      for (const auto& child : e.children()) {
        collect_relations(child, offset, out);
        offset += child.size();
      }
      return;
    }
    case Kind::Series: {
      Element offset = base;
      for (const auto& child : e.children()) {
        collect_relations(child, offset, out);
        // Every element of this block lies below everything to its right.
        for (Element i = offset; i < offset + child.size(); ++i) {
          for (Element j = offset + child.size(); j < base + e.size(); ++j) out.emplace_back(i, j);
        }
        offset += child.size();
      }
      return;
    }
  }
}

}  // namespace

Poset realize(const SpExpr& e) {
  std::vector<Relation> relations;
  collect_relations(e, 0, relations);
  return build_poset(e.size(), relations);
}

// ---------------------------------------------------------------------------
// Recognition

namespace {

/// Connected components of the graph on `elems` with adjacency `adjacent`,
/// each sorted, ordered by smallest member.
template <typename Adjacent>
std::vector<std::vector<Element>> components(const std::vector<Element>& elems, Adjacent adjacent) {
  const std::size_t m = elems.size();
  std::vector<int> label(m, -1);
  std::vector<std::vector<Element>> out;
  for (std::size_t s = 0; s < m; ++s) {
    if (label[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<std::size_t> stack{s};
    label[s] = id;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      out.back().push_back(elems[u]);
      for (std::size_t v = 0; v < m; ++v) {
        if (label[v] < 0 && adjacent(elems[u], elems[v])) {
          label[v] = id;
          stack.push_back(v);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

std::optional<SpDecomposition> decompose(const Poset& p, const std::vector<Element>& elems) {
  if (elems.size() == 1) return SpDecomposition{SpExpr::singleton(), elems};

  auto parts = components(elems, [&](Element a, Element b) { return p.comparable(a, b); });
  bool series = false;
  if (parts.size() == 1) {
    parts = components(elems, [&](Element a, Element b) { return a != b && !p.comparable(a, b); });
    if (parts.size() == 1) return std::nullopt;
    series = true;
    // Co-components are totally ordered: any cross pair decides the order.
    std::sort(parts.begin(), parts.end(),
              [&](const auto& x, const auto& y) { return p.less(x.front(), y.front()); });
  }

  std::vector<SpExpr> children;
  std::vector<Element> leaves;
  for (const auto& part : parts) {
    auto sub = decompose(p, part);
    if (!sub) return std::nullopt;
    children.push_back(std::move(sub->expr));
    leaves.insert(leaves.end(), sub->leaves.begin(), sub->leaves.end());
  }
  SpExpr expr = series ? SpExpr::series(std::move(children)) : SpExpr::parallel(std::move(children));
  return SpDecomposition{std::move(expr), std::move(leaves)};
}

}  // namespace

std::optional<SpDecomposition> recognize_sp(const Poset& p) {
  std::vector<Element> all(p.size());
  std::iota(all.begin(), all.end(), Element{0});
  return decompose(p, all);
}

}  // namespace posetbounds
