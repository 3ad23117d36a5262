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

#include "posetbounds/polytopes.hpp"

#include <algorithm>
#include <cmath>

namespace posetbounds {

OrderPoint PolytopeSampler::order_point_in(const LinearExtension& sigma, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t n = sigma.size();
  std::vector<double> u(n);
  for (double& v : u) v = unit(rng);
  std::sort(u.begin(), u.end());
  OrderPoint y(static_cast<Eigen::Index>(n));
  for (Element i = 0; i < n; ++i) y(static_cast<Eigen::Index>(i)) = u[sigma.rank(i) - 1];
  return y;
}

OrderPoint PolytopeSampler::order_point(std::mt19937_64& rng) const {
  return order_point_in(counter_.sample(rng), rng);
}

ChainPoint PolytopeSampler::chain_point(std::mt19937_64& rng) const {
  return transfer(poset(), order_point(rng));
}

OrderPoint sample_order_point(const Poset& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return PolytopeSampler(p).order_point(rng);
}

ChainPoint sample_chain_point(const Poset& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return PolytopeSampler(p).chain_point(rng);
}

McEstimate chain_polytope_volume_mc(const Poset& p, std::size_t samples, std::uint64_t seed) {
  if (samples < 1) throw ValueError("need at least one sample");
  const auto chains = maximal_chains(p);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> z(p.size());
  std::size_t hits = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    for (double& v : z) v = unit(rng);
    bool inside = true;
    for (const auto& c : chains) {
      double sum = 0.0;
      for (Element e : c) sum += z[e];
      if (sum > 1.0) {
        inside = false;
        break;
      }
    }
    hits += inside;
  }
  const double mean = static_cast<double>(hits) / static_cast<double>(samples);
  return {mean, std::sqrt(mean * (1.0 - mean) / static_cast<double>(samples))};
}

}  // namespace posetbounds
