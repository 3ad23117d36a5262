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

#include "posetbounds/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "posetbounds/harmonic.hpp"
#include "posetbounds/quantum_bounds.hpp"

namespace posetbounds {

bool BoundsReport::all_ok() const {
  for (const auto& flag : {lemma1_ok, lemma2_ok, lemma3_ok}) {
    if (flag && !*flag) return false;
  }
  return sandwich_ok;
}

BoundsReport analyze(const Poset& p, const AnalyzeOptions& options) {
  BoundsReport r;
  r.n = p.size();
  r.num_extensions = count_extensions(p, options.max_elements);
  r.itlb = log_mpz(r.num_extensions);
  r.entropy = entropy(p, options.entropy_tol).H;
  const double n = static_cast<double>(p.size());
  r.lb = std::max(0.0, n * (std::log(n) - r.entropy));
  const mpq_class qlb = qlb_enum(p, options.enumeration_cap);
  r.qlb = nearest_double(qlb);
  r.qh = nearest_double(qh_exact(p, options.enumeration_cap));
  r.sandwich_ok = r.itlb <= r.lb + kSandwichTol && r.lb <= 2 * r.itlb + kSandwichTol;
  if (r.num_extensions <= mpz_class(static_cast<unsigned long>(options.matrix_cap))) {
    const AdversaryCertificate cert = verify_adversary(p, options.matrix_cap);
    r.gamma_norm = cert.gamma_norm.value;
    r.max_gamma_ij_norm = cert.max_gamma_ij.value;
    r.lemma1_ok = cert.lemma1_ok;
    r.lemma2_ok = cert.lemma2_ok;
    r.lemma3_ok = cert.lemma3_ok;
  }
  return r;
}

namespace {

nlohmann::ordered_json count_json(const mpz_class& count) {
  if (count.fits_ulong_p()) return static_cast<unsigned long>(count.get_ui());
  return count.get_str();
}

template <typename T>
nlohmann::ordered_json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

nlohmann::ordered_json to_json(const BoundsReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["num_extensions"] = count_json(r.num_extensions);
  j["itlb"] = r.itlb;
  j["entropy"] = r.entropy;
  j["lb"] = r.lb;
  j["qlb"] = r.qlb;
  j["qh"] = r.qh;
  j["gamma_norm"] = optional_json(r.gamma_norm);
  j["max_gamma_ij_norm"] = optional_json(r.max_gamma_ij_norm);
  j["lemma1_ok"] = optional_json(r.lemma1_ok);
  j["lemma2_ok"] = optional_json(r.lemma2_ok);
  j["lemma3_ok"] = optional_json(r.lemma3_ok);
  j["sandwich_ok"] = r.sandwich_ok;
  return j;
}

std::string to_csv(const BoundsReport& r) {
  std::ostringstream out;
  out << "key,value\n";
  const auto j = to_json(r);
  for (const auto& [key, value] : j.items()) out << key << ',' << value.dump() << '\n';
  return out.str();
}

std::string to_text(const BoundsReport& r) {
  std::ostringstream out;
  const auto j = to_json(r);
  for (const auto& [key, value] : j.items()) out << key << ": " << value.dump() << '\n';
  return out.str();
}

}  // namespace posetbounds
