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

#include "posetbounds/harmonic.hpp"

#include <cmath>

namespace posetbounds {

const mpq_class& harmonic(std::size_t q) {
  static thread_local HarmonicTable table;
  return table[q];
}

double nearest_double(const mpq_class& q) {
  if (sgn(q) == 0) return 0.0;
  const mpz_class num = abs(q.get_num());
  const mpz_class& den = q.get_den();
  // Scale so the integer part has exactly 53 bits, then round half to even.
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)) - 53;
  mpz_class quot, rem, d;
  for (;;) {
    mpz_class n = num;
    d = den;
    if (e < 0) n <<= -e;
    else d <<= e;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (mpz_sizeinbase(quot.get_mpz_t(), 2) <= 53) break;
    ++e;
  }
  const int cmp_half = cmp(mpz_class(rem << 1), d);
  if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(quot.get_mpz_t()))) ++quot;
  const double magnitude = std::ldexp(quot.get_d(), static_cast<int>(e));
  return sgn(q) < 0 ? -magnitude : magnitude;
}

}  // namespace posetbounds
