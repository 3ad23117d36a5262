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
#include <map>
#include <numeric>

#include "posetbounds/errors.hpp"
#include "posetbounds/generators.hpp"
#include "posetbounds/linext.hpp"
#include "posetbounds/sp_expr.hpp"
#include "test_helpers.hpp"

using Catch::Matchers::WithinAbs;

namespace posetbounds::test {
namespace {

// Brute force over permutations; the oracle for everything below.
std::vector<std::vector<Element>> brute_force_orders(const Poset& p) {
  std::vector<Element> order(p.size());
  std::iota(order.begin(), order.end(), Element{0});
  std::vector<std::vector<Element>> out;
  do {
    bool ok = true;
    for (std::size_t a = 0; a < order.size() && ok; ++a) {
      for (std::size_t b = a + 1; b < order.size() && ok; ++b) {
        if (p.less(order[b], order[a])) ok = false;
      }
    }
    if (ok) out.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

TEST_CASE("count_extensions") {
  CHECK(count_extensions(figure2()) == 3);
  CHECK(count_extensions(Poset::antichain(5)) == 120);
  CHECK(count_extensions(Poset::antichain(20)) == mpz_class("2432902008176640000"));
  CHECK(count_extensions(Poset::chain(7)) == 1);
  CHECK(count_extensions(realize(SpExpr::nblock(1))) == 5);
  CHECK_THROWS_AS(count_extensions(Poset::antichain(21)), LimitExceeded);
}

TEST_CASE("count_extensions agrees with brute force") {
  for (const auto& item : test_family(11, 30, 7)) {
    if (item.poset.size() > 7) continue;
    INFO(item.name);
    CHECK(count_extensions(item.poset) == brute_force_orders(item.poset).size());
  }
}

TEST_CASE("itlb") {
  CHECK(itlb(Poset::chain(5)) == 0.0);
  CHECK_THAT(itlb(Poset::antichain(3)), WithinAbs(std::log(6.0), 1e-15));
  CHECK_THAT(itlb(realize(SpExpr::nblock(1))), WithinAbs(std::log(5.0), 1e-15));
  // Beyond double range for the count itself.
  CHECK_THAT(log_mpz(mpz_class(1) << 2000), WithinAbs(2000 * std::log(2.0), 1e-9));
}

TEST_CASE("enumerate_extensions") {
  const auto chain = enumerate_extensions(Poset::chain(3));
  REQUIRE(chain.size() == 1);
  CHECK(chain[0].order() == std::vector<Element>{0, 1, 2});
  CHECK(enumerate_extensions(Poset::antichain(2)).size() == 2);

  // Element orders (2,1,3), (2,3,1), (3,2,1) in 1-based labels.
  std::vector<std::vector<Element>> orders;
  for (const auto& e : enumerate_extensions(figure2())) orders.push_back(e.order());
  CHECK(orders == std::vector<std::vector<Element>>{{1, 0, 2}, {1, 2, 0}, {2, 1, 0}});

  for (const auto& item : test_family(5, 20, 6)) {
    INFO(item.name);
    std::vector<std::vector<Element>> got;
    for (const auto& e : enumerate_extensions(item.poset)) {
      CHECK(e.is_extension_of(item.poset));
      got.push_back(e.order());
    }
    CHECK(got == brute_force_orders(item.poset));
  }
  CHECK_THROWS_AS(enumerate_extensions(Poset::antichain(8), 1000), LimitExceeded);
}

TEST_CASE("LinearExtension ranks") {
  const LinearExtension e = LinearExtension::from_order({2, 0, 1});
  CHECK(e.ranks() == std::vector<std::size_t>{2, 3, 1});
  CHECK(e.order() == std::vector<Element>{2, 0, 1});
  CHECK(e.is_extension_of(figure2()) == false);
  CHECK(LinearExtension::from_order({2, 1, 0}).is_extension_of(figure2()));
}

TEST_CASE("sample_extension is uniform") {
  for (std::uint64_t seed : {1, 2, 3}) {
    CHECK(sample_extension(Poset::chain(4), seed).order() == std::vector<Element>{0, 1, 2, 3});
  }
  constexpr int kSamples = 100'000;
  auto frequencies = [&](const Poset& p) {
    std::map<std::vector<Element>, int> hits;
    const ExtensionCounter counter(p);
    std::mt19937_64 rng(99);
    for (int s = 0; s < kSamples; ++s) ++hits[counter.sample(rng).order()];
    return hits;
  };
  SECTION("antichain on 2") {
    const auto hits = frequencies(Poset::antichain(2));
    REQUIRE(hits.size() == 2);
    for (const auto& [order, count] : hits) {
      CHECK_THAT(count / double(kSamples), WithinAbs(0.5, 0.01));
    }
  }
  SECTION("single relation on 3") {
    const auto hits = frequencies(figure2());
    REQUIRE(hits.size() == 3);
    for (const auto& [order, count] : hits) {
      CHECK(LinearExtension::from_order(order).is_extension_of(figure2()));
      CHECK_THAT(count / double(kSamples), WithinAbs(1.0 / 3.0, 0.01));
    }
  }
  SECTION("N(1): chi-square against 1/5") {
    const auto hits = frequencies(realize(SpExpr::nblock(1)));
    REQUIRE(hits.size() == 5);
    double chi2 = 0;
    for (const auto& [order, count] : hits) {
      const double expected = kSamples / 5.0;
      chi2 += (count - expected) * (count - expected) / expected;
    }
    // 0.999 quantile of chi-square with 4 degrees of freedom.
    CHECK(chi2 < 18.467);
  }
}

}  // namespace
}  // namespace posetbounds::test
