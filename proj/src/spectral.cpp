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

#include "posetbounds/spectral.hpp"

namespace posetbounds {

Eigen::MatrixXd hilbert_matrix(std::size_t m) {
  const auto dim = static_cast<Eigen::Index>(m);
  Eigen::MatrixXd a(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    for (Eigen::Index l = 0; l < dim; ++l) a(k, l) = 1.0 / static_cast<double>(k + l + 1);
  }
  return a;
}

NormEstimate hilbert_norm(std::size_t m, double tol) {
  return spectral_norm(hilbert_matrix(m), tol);
}

}  // namespace posetbounds
