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

// Command-line front end: analyze a poset, run a verification suite, or scan
// the composition constant.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "posetbounds/errors.hpp"
#include "posetbounds/poset_io.hpp"
#include "posetbounds/quantum_bounds.hpp"
#include "posetbounds/report.hpp"
#include "posetbounds/sp_expr.hpp"
#include "posetbounds/verify.hpp"

namespace pb = posetbounds;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitFalsified = 2;

struct Options {
  std::string file;
  std::string expr;
  std::string suite;
  std::uint64_t seed = 42;
  std::size_t samples = 100'000;
  double tol = 1e-8;
  std::string format = "json";
  std::string verify_format = "text";
  std::size_t max_n = 500;
  pb::AnalyzeOptions caps;
};

pb::Poset load_input(const Options& o) {
  if (o.file.empty() == o.expr.empty()) {
    throw pb::ValueError("give exactly one of FILE or --expr");
  }
  if (!o.expr.empty()) return pb::realize(pb::parse_sp(o.expr));
  if (o.file == "-") return pb::read_poset(std::cin);
  return pb::read_poset_file(o.file);
}

void warn_if_raised(const char* flag, std::size_t value, std::size_t fallback) {
  if (value > fallback) {
    std::cerr << "warning: " << flag << " raised above the default " << fallback
              << "; runtime and memory grow quickly\n";
  }
}

int cmd_analyze(const Options& o) {
  warn_if_raised("--max-elements", o.caps.max_elements, pb::kDefaultMaxElements);
  warn_if_raised("--enum-cap", o.caps.enumeration_cap, pb::kDefaultEnumerationCap);
  warn_if_raised("--matrix-cap", o.caps.matrix_cap, pb::kDefaultMatrixCap);
  const pb::Poset p = load_input(o);
  pb::AnalyzeOptions caps = o.caps;
  caps.entropy_tol = o.tol;
  const pb::BoundsReport report = pb::analyze(p, caps);
  if (o.format == "json") {
    std::cout << pb::to_json(report).dump(2) << '\n';
  } else if (o.format == "csv") {
    std::cout << pb::to_csv(report);
  } else {
    std::cout << pb::to_text(report);
  }
  return report.all_ok() ? 0 : kExitFalsified;
}

int cmd_verify(const Options& o) {
  pb::VerifyConfig config;
  config.seed = o.seed;
  config.samples = o.samples;
  config.tol = o.tol;
  const auto results = pb::run_suite(o.suite, config);
  bool all_passed = true;
  if (o.verify_format == "json") {
    auto out = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      out.push_back({{"suite", r.suite}, {"property", r.name}, {"passed", r.passed},
                     {"detail", r.detail}});
    }
    std::cout << out.dump(2) << '\n';
  } else if (o.verify_format == "csv") {
    std::cout << "suite,property,passed,detail\n";
    for (const auto& r : results) {
      std::cout << r.suite << ',' << r.name << ',' << (r.passed ? "true" : "false") << ",\""
                << r.detail << "\"\n";
    }
  } else {
    for (const auto& r : results) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.suite << '/' << r.name;
      if (!r.detail.empty()) std::cout << "  (" << r.detail << ')';
      std::cout << '\n';
    }
  }
  for (const auto& r : results) all_passed = all_passed && r.passed;
  return all_passed ? 0 : kExitFalsified;
}

int cmd_tech_constant(const Options& o) {
  std::ostringstream csv;
  csv.precision(17);
  csv << "n1,n2,ratio\n";
  const pb::TechConstant tech = pb::tech_constant(
      o.max_n, [&](std::size_t n1, std::size_t n2, double r) { csv << n1 << ',' << n2 << ',' << r << '\n'; });
  std::cout.precision(17);
  std::cout << "# c_min = " << tech.c_min << "\n# argmin = (" << tech.n1 << ", " << tech.n2
            << ")\n"
            << csv.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Classical and quantum lower bounds for sorting under partial information"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, std::string& format) {
    sub->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
    sub->add_option("--samples", o.samples, "Monte-Carlo sample count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--tol", o.tol, "Numerical tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Bounds report for one poset");
  analyze->add_option("file", o.file, "Poset file ('-' for stdin)");
  analyze->add_option("--expr", o.expr, "Series-parallel expression, e.g. \"(. * .) + .\"");
  analyze->add_option("--max-elements", o.caps.max_elements, "Largest n for exact counting")
      ->capture_default_str();
  analyze->add_option("--enum-cap", o.caps.enumeration_cap, "Largest |Delta(P)| to enumerate")
      ->capture_default_str();
  analyze->add_option("--matrix-cap", o.caps.matrix_cap, "Largest adversary matrix dimension")
      ->capture_default_str();
  add_common(analyze, o.format);

  CLI::App* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("suite", o.suite, "lemmas|polytopes|orderstats|sp|adversary|all")
      ->required()
      ->check(CLI::IsMember({"lemmas", "polytopes", "orderstats", "sp", "adversary", "all"}));
  add_common(verify, o.verify_format);

  CLI::App* tech = app.add_subcommand("tech-constant", "Scan the composition constant");
  tech->add_option("--max-n", o.max_n, "Largest n2 in the scan")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100'000}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(o);
    if (*verify) return cmd_verify(o);
    return cmd_tech_constant(o);
  } catch (const pb::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
