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

#include <catch2/catch_amalgamated.hpp>

#include "posetbounds/errors.hpp"
#include "posetbounds/generators.hpp"
#include "posetbounds/linext.hpp"
#include "posetbounds/sp_expr.hpp"
#include "test_helpers.hpp"

namespace posetbounds::test {
namespace {

constexpr const char* kFigure3 = ". * (.+.+.) * (. + (. * .))";

TEST_CASE("parse_sp") {
  SECTION("seven-element example") {
    const SpExpr e = parse_sp(kFigure3);
    CHECK(e.kind() == SpExpr::Kind::Series);
    CHECK(e.size() == 7);
    REQUIRE(e.children().size() == 3);
    CHECK(e.children()[1] == SpExpr::antichain(3));
  }
  SECTION("sugar") {
    const SpExpr c = parse_sp("chain(3)");
    CHECK(c.kind() == SpExpr::Kind::Series);
    CHECK(c.children().size() == 3);
    CHECK(c == parse_sp(". * . * ."));
    CHECK(parse_sp("antichain(2)") == parse_sp(". + ."));
    CHECK(parse_sp("N(2)").size() == 8);
    CHECK(parse_sp("chain(1)") == SpExpr::singleton());
  }
  SECTION("precedence: * binds tighter than +") {
    CHECK(parse_sp(". * . + .") == parse_sp("(. * .) + ."));
  }
  SECTION("malformed input reports the offset") {
    try {
      parse_sp(". + * .");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 4);
    }
    CHECK_THROWS_AS(parse_sp(""), ParseError);
    CHECK_THROWS_AS(parse_sp("(. + ."), ParseError);
    CHECK_THROWS_AS(parse_sp(". ."), ParseError);
    CHECK_THROWS_AS(parse_sp("chain(0)"), ValueError);
    CHECK_THROWS_AS(parse_sp("chain(x)"), ParseError);
  }
  SECTION("to_string parses back") {
    std::mt19937_64 rng(3);
    for (int r = 0; r < 50; ++r) {
      const SpExpr e = random_sp_expr(1 + r % 9, rng);
      CHECK(parse_sp(e.to_string()) == e);
    }
  }
}

TEST_CASE("realize") {
  CHECK(realize(parse_sp(". + .")) == Poset::antichain(2));
  CHECK(realize(parse_sp(". * .")) == Poset::chain(2));
  // a, b, c, d = 0, 1, 2, 3 with a < b, c < b, c < d.
  CHECK(realize(parse_sp("N(1)")) == from_pairs(4, {{0, 1}, {2, 1}, {2, 3}}));
  CHECK(realize(parse_sp("N(3)")).size() == 12);
  CHECK(realize(parse_sp("(. * .) + .")) == build_poset(3, std::vector<Relation>{{0, 1}}));
}

TEST_CASE("recognize_sp") {
  SECTION("antichain is a parallel node") {
    const auto d = recognize_sp(Poset::antichain(3));
    REQUIRE(d);
    CHECK(d->expr == SpExpr::antichain(3));
  }
  SECTION("N is not series-parallel") {
    CHECK_FALSE(recognize_sp(realize(SpExpr::nblock(1))));
    CHECK_FALSE(recognize_sp(realize(SpExpr::nblock(2))));
  }
  SECTION("round trip up to the returned labeling") {
    for (const char* text : {kFigure3, "chain(4)", "(. + .) * (. + .)", "(chain(2) + .) * ."}) {
      const Poset p = realize(parse_sp(text));
      const auto d = recognize_sp(p);
      REQUIRE(d);
      CHECK(realize(d->expr).relabeled(d->leaves) == p);
    }
  }
}

TEST_CASE("count_extensions_sp") {
  for (std::size_t k = 1; k <= 6; ++k) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), 2 * k, k);
    CHECK(count_extensions_sp(SpExpr::parallel({SpExpr::chain(k), SpExpr::chain(k)})) == binom);
  }
  CHECK(count_extensions_sp(parse_sp(". * .")) == 1);
  const SpExpr fig3 = parse_sp(kFigure3);
  CHECK(count_extensions_sp(fig3) == count_extensions(realize(fig3)));
  CHECK(count_extensions_sp(fig3) == 18);
  CHECK_THROWS_AS(count_extensions_sp(parse_sp("N(1) + .")), UnsupportedNBlock);
}

}  // namespace
}  // namespace posetbounds::test
