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
#include <cmath>
#include <numbers>
#include <numeric>

#include "posetbounds/adversary.hpp"
#include "posetbounds/errors.hpp"
#include "posetbounds/generators.hpp"
#include "posetbounds/harmonic.hpp"
#include "posetbounds/linext.hpp"
#include "posetbounds/quantum_bounds.hpp"
#include "posetbounds/spectral.hpp"
#include "posetbounds/sp_expr.hpp"
#include "test_helpers.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace posetbounds::test {
namespace {

mpq_class q(long num, long den = 1) {
  mpq_class v(num, den);
  v.canonicalize();
  return v;
}

// Independent oracle: all permutations, d_i = rank(i) - max rank below i.
mpq_class brute_force_qlb(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), Element{0});
  mpq_class total = 0;
  long count = 0;
  do {
    std::vector<std::size_t> rank(n);
    for (std::size_t r = 0; r < n; ++r) rank[order[r]] = r + 1;
    bool ok = true;
    for (Element i = 0; i < n && ok; ++i) {
      for (Element j = 0; j < n; ++j) {
        if (p.less(i, j) && rank[i] > rank[j]) ok = false;
      }
    }
    if (!ok) continue;
    ++count;
    for (Element i = 0; i < n; ++i) {
      std::size_t below = 0;
      for (Element j = 0; j < n; ++j) {
        if (p.less(j, i)) below = std::max(below, rank[j]);
      }
      mpq_class h = 0;
      for (std::size_t t = 1; t + 1 <= rank[i] - below; ++t) h += mpq_class(1, t);
      total += h;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  total /= count;
  total.canonicalize();
  return total;
}

TEST_CASE("d_vector") {
  const Poset fig = figure2();
  CHECK(d_vector(fig, LinearExtension::from_order({1, 2, 0})) == DVector{2, 1, 2});
  CHECK(d_vector(Poset::chain(5), LinearExtension::from_order({0, 1, 2, 3, 4})) ==
        DVector{1, 1, 1, 1, 1});
  const LinearExtension sigma = LinearExtension::from_order({3, 1, 0, 2});
  CHECK(d_vector(Poset::antichain(4), sigma) == sigma.ranks());
  CHECK_THROWS_AS(d_vector(fig, LinearExtension::from_order({0, 1, 2})), NotAnExtension);
}

TEST_CASE("exact QLB and QH") {
  CHECK(qlb_enum(Poset::chain(6)) == 0);
  CHECK(qlb_enum(Poset::antichain(2)) == 1);
  CHECK(qlb_enum(figure2()) == q(3, 2));
  CHECK(qh_exact(Poset::antichain(1)) == 1);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(qh_exact(Poset::antichain(n)) == 1);
  CHECK(qh_exact(figure2()) == q(4, 3));
  CHECK_THROWS_AS(qlb_enum(Poset::antichain(8), 1000), LimitExceeded);

  for (const auto& item : test_family(21, 25, 7)) {
    INFO(item.name);
    CHECK(qlb_enum(item.poset) == brute_force_qlb(item.poset));
  }
}

TEST_CASE("Monte-Carlo QH") {
  const McEstimate cube = qh_mc(Poset::antichain(3), 100'000, 1);
  CHECK(std::abs(cube.estimate - 1.0) <= 3 * cube.std_error);
  const McEstimate fig = qh_mc(figure2(), 100'000, 2);
  CHECK(std::abs(fig.estimate - 4.0 / 3.0) <= 3 * fig.std_error);
  const McEstimate tri = qh_mc(Poset::chain(2), 100'000, 3);
  CHECK(std::abs(tri.estimate - 1.5) <= 3 * tri.std_error);
  // Same seed, same stream.
  CHECK(qh_mc(figure2(), 1000, 9).estimate == qh_mc(figure2(), 1000, 9).estimate);
}

TEST_CASE("compositional QLB") {
  CHECK(qlb_sp(parse_sp(". * . * .")) == 0);
  CHECK(qlb_sp(parse_sp("(. * .) + .")) == q(3, 2));
  for (std::size_t k = 1; k <= 8; ++k) {
    const mpq_class expected = mpq_class(2 * k) * harmonic(2 * k) - mpq_class(2 * k) * harmonic(k);
    CHECK(qlb_sp(SpExpr::parallel({SpExpr::chain(k), SpExpr::chain(k)})) == expected);
  }
  CHECK(composition_gain(1, 2) == mpq_class(3) * harmonic(3) - mpq_class(2) * harmonic(2) - 1);
  CHECK_THROWS_AS(qlb_sp(parse_sp("N(1)")), UnsupportedNBlock);
}

TEST_CASE("N_k bounds") {
  const NkBounds b1 = nk_bounds(1);
  CHECK_THAT(b1.itlb_lo, WithinAbs(std::log(2.0), 1e-15));
  CHECK_THAT(b1.itlb_hi, WithinAbs(std::log(6.0), 1e-15));
  CHECK(b1.qlb_lo == 2);
  const double it = itlb(realize(SpExpr::nblock(1)));
  CHECK(b1.itlb_lo < it);
  CHECK(it < b1.itlb_hi);
  CHECK(qlb_enum(realize(SpExpr::nblock(2))) >= nk_bounds(2).qlb_lo);
  // The two-level extension (A + C) * (B + D) has QLB exactly qlb_lo.
  for (std::size_t k = 1; k <= 3; ++k) {
    const SpExpr half = SpExpr::parallel({SpExpr::chain(k), SpExpr::chain(k)});
    CHECK(qlb_sp(SpExpr::series({half, half})) == nk_bounds(k).qlb_lo);
  }
}

TEST_CASE("composition constant") {
  CHECK_THAT(tech_ratio(1, 1), WithinRel(1.0 / std::log(2.0), 1e-14));
  for (std::size_t n = 3; n <= 40; ++n) {
    CHECK_THAT(tech_ratio(1, n - 1), WithinRel(harmonic(n - 1).get_d() / std::log(double(n)), 1e-12));
  }
  std::vector<std::tuple<std::size_t, std::size_t, double>> seen;
  const TechConstant two = tech_constant(2, [&](std::size_t a, std::size_t b, double r) {
    seen.emplace_back(a, b, r);
  });
  CHECK(seen.size() == 3);
  CHECK(std::get<2>(seen.front()) == tech_ratio(1, 1));
  CHECK(two.c_min == tech_ratio(2, 2));
  const TechConstant big = tech_constant(500);
  CHECK(big.c_min > 0);
  CHECK(big.c_min <= tech_ratio(big.n1, big.n2));
  CHECK_THROWS_AS(tech_constant(1), ValueError);
}

TEST_CASE("spectral norm") {
  CHECK(spectral_norm(Eigen::MatrixXd::Zero(3, 3).eval()).value == 0.0);
  Eigen::Matrix2d swap;
  swap << 0, 1, 1, 0;
  CHECK_THAT(spectral_norm(swap).value, WithinAbs(1.0, 1e-9));
  // Reference values from LAPACK SVD.
  CHECK_THAT(hilbert_norm(10).value, WithinRel(1.7519196702651776, 1e-8));
  CHECK_THAT(hilbert_norm(50).value, WithinRel(2.076296683131165, 1e-8));
  CHECK_THAT(hilbert_norm(200).value, WithinRel(2.27426698743188, 1e-8));
  for (std::size_t m : {10, 50, 200}) CHECK(hilbert_norm(m).value < std::numbers::pi);
  const NormEstimate e = hilbert_norm(50);
  CHECK(e.lower <= e.value * (1 + 1e-12));
  CHECK(e.value <= e.upper * (1 + 1e-12));
}

TEST_CASE("adversary matrix") {
  SECTION("chain: single extension") {
    const AdversaryMatrix g = build_adversary(Poset::chain(4));
    CHECK(g.dim() == 1);
    CHECK(g.entries.nonZeros() == 0);
  }
  SECTION("antichain on 2") {
    const AdversaryMatrix g = build_adversary(Poset::antichain(2));
    REQUIRE(g.dim() == 2);
    CHECK(g.at(0, 1) == 1.0);
    CHECK(g.at(1, 0) == 1.0);
    CHECK(g.at(0, 0) == 0.0);
    const AdversaryMatrix masked = gamma_ij(g, 0, 1);
    CHECK(Eigen::MatrixXd(masked.entries) == Eigen::MatrixXd(g.entries));
  }
  SECTION("single relation on three elements") {
    const AdversaryMatrix g = build_adversary(figure2());
    REQUIRE(g.dim() == 3);
    const auto row = [&](std::vector<Element> order) {
      return *g.index_of(LinearExtension::from_order(order));
    };
    const std::size_t s213 = row({1, 0, 2}), s231 = row({1, 2, 0}), s321 = row({2, 1, 0});
    CHECK(g.at(s213, s231) == 1.0);
    CHECK(g.at(s231, s321) == 1.0);
    CHECK(g.at(s213, s321) == 0.5);
    CHECK(Eigen::MatrixXd(g.entries).isApprox(Eigen::MatrixXd(g.entries).transpose()));
    CHECK(Eigen::MatrixXd(g.entries).diagonal().isZero());

    // Pairs that keep a and c in the same relative order are masked out.
    const AdversaryMatrix ac = gamma_ij(g, 0, 2);
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) {
        const auto& x = (*g.extensions)[r];
        const auto& y = (*g.extensions)[c];
        const bool flips = (x.rank(0) < x.rank(2)) != (y.rank(0) < y.rank(2));
        CHECK(ac.at(r, c) == (flips ? g.at(r, c) : 0.0));
      }
    }
  }
  SECTION("chain: masked matrices vanish") {
    const AdversaryMatrix g = build_adversary(Poset::chain(3));
    CHECK(gamma_ij(g, 0, 2).entries.nonZeros() == 0);
  }
  SECTION("size cap") { CHECK_THROWS_AS(build_adversary(Poset::antichain(7), 100), LimitExceeded); }
}

TEST_CASE("adversary certificates") {
  const AdversaryCertificate a2 = verify_adversary(Poset::antichain(2));
  CHECK_THAT(a2.gamma_norm.value, WithinAbs(1.0, 1e-9));
  CHECK(a2.qlb == 1);
  CHECK_THAT(a2.max_gamma_ij.value, WithinAbs(1.0, 1e-9));

  const AdversaryCertificate a3 = verify_adversary(Poset::antichain(3));
  CHECK(a3.qlb == q(5, 2));
  CHECK(a3.gamma_norm.value >= 2.5 * (1 - 1e-9));

  const AdversaryCertificate fig = verify_adversary(figure2());
  CHECK(fig.lemma1_ok);
  CHECK(fig.lemma2_ok);
  CHECK(fig.lemma3_ok);

  for (const auto& item : test_family(4, 20, 7)) {
    if (count_extensions(item.poset) > 2000) continue;
    INFO(item.name);
    const AdversaryCertificate c = verify_adversary(item.poset);
    CHECK(c.lemma1_ok);
    CHECK(c.lemma2_ok);
    CHECK(c.lemma3_ok);
    // The uniform vector already certifies at least QLB.
    CHECK(c.uniform_rayleigh >= c.qlb.get_d() * (1 - 1e-12));
    CHECK(c.gamma_norm.value >= c.uniform_rayleigh * (1 - 1e-9));
  }
}

}  // namespace
}  // namespace posetbounds::test

namespace posetbounds::test {
namespace {

TEST_CASE("rational to double rounds to nearest") {
  CHECK(nearest_double(mpq_class(49, 20)) == 2.45);
  CHECK(nearest_double(mpq_class(1, 3)) == 1.0 / 3.0);
  CHECK(nearest_double(mpq_class(-2, 3)) == -2.0 / 3.0);
  CHECK(nearest_double(mpq_class(0)) == 0.0);
  CHECK(nearest_double(harmonic(6)) == 2.45);
  // 2^53 + 1 is a tie between 2^53 and 2^53 + 2; even wins.
  const mpz_class tie = (mpz_class(1) << 53) + 1;
  CHECK(nearest_double(mpq_class(tie)) == 9007199254740992.0);
  CHECK(nearest_double(mpq_class(tie + 2)) == 9007199254740996.0);
  for (long num = 1; num < 200; num += 7) {
    for (long den = 1; den < 200; den += 11) {
      CHECK(nearest_double(mpq_class(num, den)) == double(num) / double(den));
    }
  }
}

}  // namespace
}  // namespace posetbounds::test
