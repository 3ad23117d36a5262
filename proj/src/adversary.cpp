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

#include "posetbounds/adversary.hpp"

#include <numbers>
#include <string>

#include "posetbounds/errors.hpp"
#include "posetbounds/harmonic.hpp"
#include "posetbounds/quantum_bounds.hpp"

namespace posetbounds {

std::optional<std::size_t> AdversaryMatrix::index_of(const LinearExtension& sigma) const {
  if (!index) return std::nullopt;
  auto it = index->find(sigma.order());
  if (it == index->end()) return std::nullopt;
  return it->second;
}

AdversaryMatrix build_adversary(const Poset& p, std::size_t cap) {
  const mpz_class count = count_extensions(p);
  if (count > mpz_class(static_cast<unsigned long>(cap))) {
    throw LimitExceeded("adversary matrix needs " + count.get_str() +
                        " rows, above the cap of " + std::to_string(cap));
  }
  auto extensions = std::make_shared<std::vector<LinearExtension>>(enumerate_extensions(p, cap));
  auto index = std::make_shared<std::map<std::vector<Element>, std::size_t>>();
  for (std::size_t r = 0; r < extensions->size(); ++r) index->emplace((*extensions)[r].order(), r);

  std::vector<Eigen::Triplet<double>> triplets;
  for (std::size_t row = 0; row < extensions->size(); ++row) {
    const LinearExtension& sigma = (*extensions)[row];
    const DVector d = d_vector(p, sigma);
    const std::vector<Element> order = sigma.order();
    for (Element i = 0; i < p.size(); ++i) {
      const std::size_t pos = sigma.rank(i) - 1;
      for (std::size_t shift = 1; shift < d[i]; ++shift) {
        std::vector<Element> moved = order;
        moved.erase(moved.begin() + static_cast<std::ptrdiff_t>(pos));
        moved.insert(moved.begin() + static_cast<std::ptrdiff_t>(pos - shift), i);
        const std::size_t col = index->at(moved);
        const double w = 1.0 / static_cast<double>(shift);
        triplets.emplace_back(row, col, w);
        triplets.emplace_back(col, row, w);
      }
    }
  }
  const auto dim = static_cast<Eigen::Index>(extensions->size());
  AdversaryMatrix gamma{extensions, index, Eigen::SparseMatrix<double>(dim, dim)};
  // An adjacent swap is reached from both of its ends; keep one copy.
  gamma.entries.setFromTriplets(triplets.begin(), triplets.end(),
                                [](double, double b) { return b; });
  return gamma;
}

AdversaryMatrix gamma_ij(const AdversaryMatrix& gamma, Element i, Element j) {
  if (i == j) throw ValueError("gamma_ij needs distinct elements");
  const auto& ext = *gamma.extensions;
  if (!ext.empty() && (i >= ext.front().size() || j >= ext.front().size())) {
    throw IndexError("gamma_ij element out of range");
  }
  AdversaryMatrix masked{gamma.extensions, gamma.index, gamma.entries};
  masked.entries.prune([&](Eigen::Index row, Eigen::Index col, double) {
    const bool before_row = ext[row].rank(i) < ext[row].rank(j);
    const bool before_col = ext[col].rank(i) < ext[col].rank(j);
    return before_row != before_col;
  });
  return masked;
}

AdversaryCertificate verify_adversary(const Poset& p, std::size_t cap, double rel_tol,
                                      double norm_tol) {
  const AdversaryMatrix gamma = build_adversary(p, cap);
  AdversaryCertificate cert;
  cert.qlb = qlb_enum(p, cap);
  cert.gamma_norm = spectral_norm(gamma.entries, norm_tol);
  cert.uniform_rayleigh = gamma.entries.sum() / static_cast<double>(gamma.dim());

  for (Element i = 0; i < p.size(); ++i) {
    for (Element j = i + 1; j < p.size(); ++j) {
      const NormEstimate est = spectral_norm(gamma_ij(gamma, i, j).entries, norm_tol);
      if (est.value > cert.max_gamma_ij.value || (i == 0 && j == 1)) {
        cert.max_gamma_ij = est;
        cert.argmax_i = i;
        cert.argmax_j = j;
      }
    }
  }

  const double qlb = nearest_double(cert.qlb);
  const double two_pi = 2.0 * std::numbers::pi;
  const double denom = cert.max_gamma_ij.value;
  cert.lemma1_ok = cert.gamma_norm.value >= qlb - rel_tol * qlb;
  cert.lemma2_ok = denom <= two_pi + rel_tol;
  cert.lemma3_ok =
      denom > 0.0 ? cert.gamma_norm.value / denom >= qlb / two_pi - rel_tol : qlb == 0.0;
  return cert;
}

}  // namespace posetbounds
