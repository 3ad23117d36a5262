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

#include "posetbounds/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "posetbounds/adversary.hpp"
#include "posetbounds/entropy.hpp"
#include "posetbounds/errors.hpp"
#include "posetbounds/generators.hpp"
#include "posetbounds/harmonic.hpp"
#include "posetbounds/linext.hpp"
#include "posetbounds/orderstats.hpp"
#include "posetbounds/polytopes.hpp"
#include "posetbounds/quantum_bounds.hpp"
#include "posetbounds/sp_expr.hpp"

namespace posetbounds {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) : name_(std::move(name)) {}

  void record(std::string property, bool passed, const std::string& detail = {}) {
    results_.push_back({name_, std::move(property), passed, detail});
  }

  std::vector<PropertyResult> take() { return std::move(results_); }

 private:
  std::string name_;
  std::vector<PropertyResult> results_;
};

template <typename T>
std::string str(const T& v) {
  std::ostringstream out;
  out.precision(12);
  out << v;
  return out.str();
}

Poset figure2() {
  const std::vector<Relation> rel{{1, 0}};
  return build_poset(3, rel);
}

/// Random SP expressions whose realizations stay enumerable.
std::vector<SpExpr> sp_family(std::size_t count, std::size_t max_n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size(1, max_n);
  std::vector<SpExpr> out;
  while (out.size() < count) {
    SpExpr e = random_sp_expr(size(rng), rng);
    if (count_extensions_sp(e) <= mpz_class(static_cast<unsigned long>(kDefaultEnumerationCap))) {
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<PropertyResult> suite_sp(const VerifyConfig& cfg) {
  Suite s("sp");
  std::mt19937_64 rng(cfg.seed);

  const SpExpr fig3 = parse_sp(". * (.+.+.) * (. + (. * .))");
  s.record("figure3_parses_to_7_elements", realize(fig3).size() == 7);

  bool round_trip = true, counts = true;
  for (const SpExpr& e : sp_family(200, 12, rng)) {
    const Poset p = realize(e);
    const auto dec = recognize_sp(p);
    if (!dec || realize(dec->expr).relabeled(dec->leaves) != p) round_trip = false;
    if (count_extensions_sp(e) != count_extensions(p)) counts = false;
  }
  s.record("recognize_realize_round_trip", round_trip, "200 expressions, n <= 12");
  s.record("count_extensions_sp_matches_dp", counts);

  std::size_t mismatches = 0;
  std::uniform_int_distribution<std::size_t> size(1, 9);
  std::uniform_real_distribution<double> density(0.05, 0.8);
  for (int r = 0; r < 10000; ++r) {
    const Poset p = random_poset(size(rng), density(rng), rng);
    if ((count_induced_N(p) == 0) != recognize_sp(p).has_value()) ++mismatches;
  }
  s.record("n_free_iff_series_parallel", mismatches == 0, "10000 random posets, n <= 9");

  constexpr std::size_t kCap = 3'628'800;  // 10!: every poset on <= 10 elements
  bool lbser = true, lbpar = true, qhpar = true, sp_vs_enum = true;
  std::string counterexample;
  std::size_t pairs = 0;
  std::uniform_int_distribution<std::size_t> half(1, 5);
  while (pairs < 100) {
    const SpExpr a = random_sp_expr(half(rng), rng);
    const SpExpr b = random_sp_expr(half(rng), rng);
    const SpExpr ser = SpExpr::series({a, b});
    const SpExpr par = SpExpr::parallel({a, b});
    const Poset pa = realize(a), pb = realize(b);
    const mpq_class qa = qlb_enum(pa, kCap), qb = qlb_enum(pb, kCap);
    const std::size_t n1 = a.size(), n2 = b.size();
    if (qlb_enum(realize(ser), kCap) != qa + qb) lbser = false;
    const mpq_class qpar = qlb_enum(realize(par), kCap);
    if (qpar != qa + qb + composition_gain(n1, n2)) {
      if (lbpar) {
        counterexample = a.to_string() + " + " + b.to_string() + ": " + qpar.get_str() +
                         " vs " + mpq_class(qa + qb + composition_gain(n1, n2)).get_str();
      }
      lbpar = false;
    }
    const mpq_class n = static_cast<unsigned long>(n1 + n2);
    if (qh_exact(realize(par), kCap) != mpq_class(static_cast<unsigned long>(n1)) / n * qh_exact(pa, kCap) +
                                      mpq_class(static_cast<unsigned long>(n2)) / n * qh_exact(pb, kCap)) {
      qhpar = false;
    }
    if (qlb_sp(ser) != qlb_enum(realize(ser), kCap) || qlb_sp(par) != qpar) sp_vs_enum = false;
    ++pairs;
  }
  s.record("qlb_series_additive", lbser, "100 random pairs, total n <= 10, exact");
  s.record("qlb_parallel_rule", lbpar, lbpar ? "exact rationals" : counterexample);
  s.record("qh_parallel_weighted_mean", qhpar, "exact rationals");
  s.record("qlb_sp_matches_enumeration", sp_vs_enum);
  return s.take();
}

std::vector<PropertyResult> suite_lemmas(const VerifyConfig& cfg) {
  Suite s("lemmas");
  const auto family = test_family(cfg.seed, 20, 8);

  bool identity = true, mc = true;
  double worst_z = 0.0;
  std::uint64_t stream = cfg.seed;
  for (const auto& item : family) {
    const Poset& p = item.poset;
    if (p.size() > 8) continue;
    const mpq_class qlb = qlb_enum(p);
    const mpq_class qh = qh_exact(p);
    const mpq_class n = static_cast<unsigned long>(p.size());
    if (qlb != n * (harmonic(p.size()) - qh)) identity = false;
    const McEstimate est = qh_mc(p, cfg.samples, ++stream);
    const double z = std::abs(est.estimate - qh.get_d()) / std::max(est.std_error, 1e-300);
    if (est.std_error == 0.0 ? est.estimate != qh.get_d() : z > 4.0) mc = false;
    if (est.std_error > 0.0) worst_z = std::max(worst_z, z);
  }
  s.record("qlb_equals_n_times_Hn_minus_qh", identity, "exact rationals");
  s.record("qh_monte_carlo_matches_exact", mc, "worst |z| = " + str(worst_z));

  // Extension monotonicity over every labeled poset on 5 elements.
  const auto all = all_posets(5);
  std::vector<std::uint32_t> masks(all.size());
  std::vector<mpq_class> qlbs(all.size());
  for (std::size_t a = 0; a < all.size(); ++a) {
    for (const auto& [i, j] : all[a].relation_pairs()) masks[a] |= 1u << (i * 5 + j);
    qlbs[a] = qlb_enum(all[a]);
  }
  std::size_t checked = 0;
  bool monotone = true;
  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = 0; b < all.size(); ++b) {
      if ((masks[a] & ~masks[b]) != 0) continue;  // b does not extend a
      ++checked;
      if (qlbs[b] > qlbs[a]) monotone = false;
    }
  }
  s.record("qlb_monotone_under_extension", monotone,
           str(all.size()) + " posets, " + str(checked) + " pairs");

  const TechConstant tech = tech_constant(500);
  s.record("tech_constant_positive", tech.c_min > 0,
           "c_min = " + str(tech.c_min) + " at (" + str(tech.n1) + ", " + str(tech.n2) + ")");

  std::mt19937_64 rng(cfg.seed);
  bool main_ok = true;
  for (const SpExpr& e : sp_family(200, 10, rng)) {
    const Poset p = realize(e);
    const mpz_class count = count_extensions(p);
    if (count <= 1 || count > 10000) continue;
    if (qlb_enum(p).get_d() / log_mpz(count) < tech.c_min) main_ok = false;
  }
  s.record("series_parallel_qlb_over_itlb_at_least_c_min", main_ok);

  bool nk = true;
  for (std::size_t k = 1; k <= 2; ++k) {
    const Poset p = realize(SpExpr::nblock(k));
    const NkBounds b = nk_bounds(k);
    const double lt = itlb(p);
    nk = nk && b.itlb_lo < lt && lt < b.itlb_hi && qlb_enum(p) >= b.qlb_lo;
  }
  s.record("nk_bounds_k_1_2", nk);

  bool exp_ln = true;
  for (const auto& item : named_posets()) {
    if (item.poset.size() > 6) continue;
    std::mt19937_64 pick(cfg.seed);
    const LinearExtension sigma = ExtensionCounter(item.poset).sample(pick);
    for (Element i = 0; i < item.poset.size(); ++i) {
      const auto r = exp_ln_gap_check(item.poset, sigma, i, std::max<std::size_t>(cfg.samples / 10, 1000),
                                      cfg.seed + i);
      if (r.residual > 4 * r.std_error + 1e-12) exp_ln = false;
    }
  }
  s.record("expected_log_gap_matches_harmonic", exp_ln);
  return s.take();
}

std::vector<PropertyResult> suite_polytopes(const VerifyConfig& cfg) {
  Suite s("polytopes");
  const EntropySolution fig = entropy(figure2(), cfg.tol);
  const bool fig_ok = std::abs(fig.H - 2.0 / 3.0 * std::log(2.0)) <= 1e-6 &&
                      (fig.z_star - Eigen::Vector3d(0.5, 0.5, 1.0)).cwiseAbs().maxCoeff() <= 1e-5;
  s.record("figure2_entropy", fig_ok, "H = " + str(fig.H));

  const auto family = test_family(cfg.seed, 20, 10);
  double worst = 0.0;
  bool feasible = true;
  std::mt19937_64 rng(cfg.seed);
  for (const auto& item : family) {
    const Poset& p = item.poset;
    const PolytopeSampler sampler(p);
    const auto chains = maximal_chains(p);
    for (int r = 0; r < 1000; ++r) {
      const OrderPoint y = sampler.order_point(rng);
      const ChainPoint z = transfer(p, y);
      if (!in_chain_polytope(chains, z, 0.0)) feasible = false;
      worst = std::max(worst, (transfer_inverse(p, z) - y).cwiseAbs().maxCoeff());
      const ChainPoint z2 = sampler.chain_point(rng);
      worst = std::max(worst, (transfer(p, transfer_inverse(p, z2)) - z2).cwiseAbs().maxCoeff());
    }
  }
  s.record("transfer_round_trip", worst <= 1e-12, "max error " + str(worst));
  s.record("transfer_lands_in_chain_polytope", feasible);

  bool volume = true, sandwich = true;
  for (const auto& item : family) {
    const Poset& p = item.poset;
    const double n = static_cast<double>(p.size());
    if (p.size() <= 8) {
      mpz_class fact;
      mpz_fac_ui(fact.get_mpz_t(), p.size());
      const double exact = mpq_class(count_extensions(p), fact).get_d();
      const McEstimate v = chain_polytope_volume_mc(p, cfg.samples, cfg.seed);
      if (std::abs(v.estimate - exact) > 4 * v.std_error + 1e-15) volume = false;
    }
    const double lt = itlb(p);
    if (lt > 0) {
      const double bound = n * (std::log(n) - entropy(p, cfg.tol).H);
      if (!(lt <= bound + 1e-6 && bound <= 2 * lt + 1e-6)) sandwich = false;
    }
  }
  s.record("chain_polytope_volume", volume, "within 4 standard errors of |Delta|/n!");
  s.record("itlb_lb_sandwich", sandwich);
  return s.take();
}

std::vector<PropertyResult> suite_orderstats(const VerifyConfig& cfg) {
  Suite s("orderstats");
  double worst_density = 0.0, worst_closed = 0.0;
  for (std::size_t n = 1; n <= 30; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      if (k < n) worst_density = std::max(worst_density, std::abs(density_f_integral(n, k) - 1.0));
      for (int step = 0; step <= 10; ++step) {
        const auto r = closed_form_checks(n, k, step / 10.0);
        for (const auto& v : {r.I, r.J, r.H}) {
          if (v) worst_closed = std::max(worst_closed, *v);
        }
      }
    }
  }
  s.record("density_integrates_to_one", worst_density <= 1e-10, "worst " + str(worst_density));
  s.record("closed_form_integrals", worst_closed <= 1e-8, "worst " + str(worst_closed));

  const std::size_t samples = std::max(cfg.samples, kMinKsSamples);
  double worst_ratio = 0.0;
  std::uint64_t stream = cfg.seed;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t d = 1; i + d <= n; ++d) {
        const double ks = gap_distribution_check(n, i, d, samples, ++stream);
        worst_ratio = std::max(worst_ratio, ks / ks_critical(samples, 1e-3));
      }
    }
  }
  s.record("gap_distribution_ks", worst_ratio <= 1.0, "worst KS / critical = " + str(worst_ratio));

  const double two = ks_two_sample(sample_gaps(6, 1, 2, samples, cfg.seed),
                                   sample_gaps(6, 3, 2, samples, cfg.seed + 1));
  s.record("gap_independent_of_position", two <= ks_critical_two_sample(samples, samples, 1e-3),
           "KS = " + str(two));
  return s.take();
}

std::vector<PropertyResult> suite_adversary(const VerifyConfig& cfg) {
  Suite s("adversary");
  bool l1 = true, l2 = true, l3 = true, rayleigh = true;
  std::size_t checked = 0;
  for (const auto& item : test_family(cfg.seed, 20, 7)) {
    if (count_extensions(item.poset) > 2000) continue;
    const AdversaryCertificate c = verify_adversary(item.poset);
    ++checked;
    l1 = l1 && c.lemma1_ok;
    l2 = l2 && c.lemma2_ok;
    l3 = l3 && c.lemma3_ok;
    rayleigh = rayleigh && c.uniform_rayleigh >= c.qlb.get_d() * (1 - 1e-12);
  }
  s.record("lemma1_norm_at_least_qlb", l1, str(checked) + " posets");
  s.record("lemma2_masked_norm_at_most_2pi", l2);
  s.record("lemma3_ratio_at_least_qlb_over_2pi", l3);
  s.record("uniform_rayleigh_at_least_qlb", rayleigh);
  bool hilbert = true;
  for (std::size_t m : {10, 50, 200}) hilbert = hilbert && hilbert_norm(m).value < std::numbers::pi;
  s.record("hilbert_norm_below_pi", hilbert);
  return s.take();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"adversary", "lemmas", "orderstats", "polytopes",
                                              "sp"};
  return names;
}

std::vector<PropertyResult> run_suite(const std::string& name, const VerifyConfig& config) {
  std::vector<PropertyResult> out;
  auto run = [&](const std::string& suite) {
    std::vector<PropertyResult> part;
    if (suite == "adversary") part = suite_adversary(config);
    if (suite == "lemmas") part = suite_lemmas(config);
    if (suite == "orderstats") part = suite_orderstats(config);
    if (suite == "polytopes") part = suite_polytopes(config);
    if (suite == "sp") part = suite_sp(config);
    out.insert(out.end(), part.begin(), part.end());
  };
  if (name == "all") {
    for (const auto& suite : suite_names()) run(suite);
  } else if (std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end()) {
    run(name);
  } else {
    throw ValueError("unknown suite '" + name + "'");
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.suite, a.name) < std::tie(b.suite, b.name);
  });
  return out;
}

}  // namespace posetbounds
