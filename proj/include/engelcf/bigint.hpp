// Copyright 2026 The engelcf Authors
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

#ifndef ENGELCF_BIGINT_HPP_
#define ENGELCF_BIGINT_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace engelcf {

// Arbitrary-precision signed integer.  The sequences this library produces
// grow doubly exponentially (the digit count itself grows geometrically), so
// the GMP backend is the only practical choice: its subquadratic
// multiplication keeps even ~10^5-digit terms cheap.
using integer = boost::multiprecision::mpz_int;

// Floor division (round toward -infinity), any sign of a, b != 0.
inline integer floor_div(const integer& a, const integer& b) {
  integer q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Number of bits in |v|; 0 for v == 0.
inline std::size_t bit_length(const integer& v) {
  if (v == 0) return 0;
  const integer a = abs(v);
  return boost::multiprecision::msb(a) + 1;
}

// Cheap upper-ish estimate of the decimal digit count of |v| from the bit
// length alone (no base conversion).  Off by at most one from the true
// count, which is all the digit-budget check needs.
inline std::size_t decimal_digits_estimate(const integer& v) {
  const std::size_t bits = bit_length(v);
  if (bits == 0) return 1;
  return static_cast<std::size_t>(
             static_cast<double>(bits) * 0.30102999566398120) +
         1;
}

// Exact decimal digit count of |v| (1 for zero).  Does a base conversion;
// fine for occasional reporting, avoid in hot loops.
inline std::size_t decimal_digits_exact(const integer& v) {
  if (v == 0) return 1;
  const integer a = abs(v);
  return a.str().size();
}

// log10(|v|) as a double, computed from the top 64 bits of the mantissa and
// the bit length, so it stays accurate for values far beyond double range.
// v must be nonzero.
inline double log10_approx(const integer& v) {
  const integer a = abs(v);
  const std::size_t bits = bit_length(a);
  if (bits <= 63) return std::log10(static_cast<double>(a.convert_to<std::uint64_t>()));
  const std::uint64_t top =
      (a >> (bits - 63)).convert_to<std::uint64_t>();
  return std::log10(static_cast<double>(top)) +
         static_cast<double>(bits - 63) * 0.30102999566398120;
}

// 10^n for n >= 0.
inline integer pow10(std::size_t n) {
  integer r;
  mpz_ui_pow_ui(r.backend().data(), 10u, static_cast<unsigned long>(n));
  return r;
}

// base^exp for exp >= 0 by binary exponentiation (0^0 == 1).
inline integer ipow(const integer& base, integer exp) {
  integer result(1);
  integer b = base;
  while (exp > 0) {
    if ((exp & 1) != 0) result *= b;
    exp >>= 1;
    if (exp > 0) b *= b;
  }
  return result;
}

}  // namespace engelcf

#endif  // ENGELCF_BIGINT_HPP_
