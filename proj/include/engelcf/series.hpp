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

#ifndef ENGELCF_SERIES_HPP_
#define ENGELCF_SERIES_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "engelcf/bigint.hpp"
#include "engelcf/cf.hpp"
#include "engelcf/engel.hpp"
#include "engelcf/errors.hpp"
#include "engelcf/rational.hpp"

namespace engelcf {

// S_n = p/q + sum_{j=2..n} 1/x_j, exact and in lowest terms.  The
// denominator of S_n is exactly x_n: each summand divides into the running
// denominator (x_j | x_{j+1}), and the numerator stays coprime to it.
struct series_partial_sum {
  std::size_t n;
  rational value;
  const integer& P() const { return value.num(); }
  const integer& Q() const { return value.den(); }
};

inline series_partial_sum partial_sum(const engel_state& s, std::size_t n) {
  if (n < 1 || n > s.terms())
    throw index_out_of_range("partial_sum: n=" + std::to_string(n) +
                             " exceeds stored terms");
  rational acc = s.config().seed;
  for (std::size_t j = 2; j <= n; ++j)
    acc = acc + rational(integer(1), s.x(j));
  return series_partial_sum{n, std::move(acc)};
}

// The interlaced expansion of S_n: the even-normalized seed expansion
// [a_0; a_1, ..., a_2k] followed by the pairs
//
//   (y_0 z_1, x_1), (y_1 z_2, x_2), ..., (y_{n-2} z_{n-1}, x_{n-1}),
//
// 2(k + n - 1) + 1 coefficients in total.  For n = 1 this is the seed
// expansion unchanged.
inline continued_fraction predicted_cf(const engel_state& s, std::size_t n) {
  if (n < 1 || n > s.terms())
    throw index_out_of_range("predicted_cf: n=" + std::to_string(n) +
                             " exceeds stored terms");
  std::vector<integer> coeffs = s.base_cf().coefficients();
  coeffs.reserve(coeffs.size() + 2 * (n - 1));
  for (std::size_t j = 1; j + 1 <= n; ++j) {
    coeffs.push_back(s.y(j - 1) * s.z(j));
    coeffs.push_back(s.x(j));
  }
  return continued_fraction(std::move(coeffs));
}

// Outcome of checking one truncation of the interlaced expansion against
// the independently computed partial sum.  Three identity families are
// checked separately so a failure points at the exact broken identity.
struct theorem_report {
  struct check {
    std::string name;
    bool pass;
  };
  std::vector<check> checks;
  std::string first_failure;  // empty when everything passed

  bool all_pass() const {
    for (const check& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Checks a candidate expansion (normally predicted_cf(s, n)) against the
// state: (a) its value equals S_n; (b) its convergent denominators hit the
// sequence terms, q_{2k+2j-2} = x_j and q_{2k+2j-1} = y_j - 1 for every
// applicable j; (c) the determinant identity holds along its table.
// Violations come back as a failing report, never an exception.
inline theorem_report verify_theorem(const engel_state& s, std::size_t n,
                                     const continued_fraction& candidate) {
  theorem_report report;
  const auto fail = [&](const std::string& what) {
    if (report.first_failure.empty()) report.first_failure = what;
  };

  const series_partial_sum sum = partial_sum(s, n);
  const convergent_table table = convergents(candidate);

  const rational value = rational(table.p(table.final_cf_index()),
                                  table.q(table.final_cf_index()));
  const bool value_ok = value == sum.value;
  if (!value_ok) fail("value: cf evaluates to " + value.str() +
                      ", partial sum is " + sum.value.str());
  report.checks.push_back({"value", value_ok});

  bool denoms_ok = true;
  const std::ptrdiff_t k2 = static_cast<std::ptrdiff_t>(2 * s.k());
  for (std::size_t j = 1; j <= n && denoms_ok; ++j) {
    const std::ptrdiff_t even_index = k2 + 2 * static_cast<std::ptrdiff_t>(j) - 2;
    if (even_index > table.final_cf_index()) break;
    if (table.q(even_index) != s.x(j)) {
      denoms_ok = false;
      fail("denominator: q_" + std::to_string(even_index) + " != x_" +
           std::to_string(j));
    }
    const std::ptrdiff_t odd_index = even_index + 1;
    if (j + 1 <= n && odd_index <= table.final_cf_index() &&
        table.q(odd_index) != s.y(j) - 1) {
      denoms_ok = false;
      fail("denominator: q_" + std::to_string(odd_index) + " != y_" +
           std::to_string(j) + " - 1");
    }
  }
  report.checks.push_back({"denominators", denoms_ok});

  const bool det_ok = det_check(table);
  if (!det_ok) fail("determinant identity violated in convergent table");
  report.checks.push_back({"determinant", det_ok});

  return report;
}

inline theorem_report verify_theorem(const engel_state& s, std::size_t n) {
  return verify_theorem(s, n, predicted_cf(s, n));
}

// 2/x_{n+1}, an exact upper bound on S - S_n: the tail sum_{j>n} 1/x_j is
// dominated by the geometric series (1/x_{n+1}) * sum 2^{-i} because every
// later term at least doubles the denominator.
inline rational tail_bound(const engel_state& s, std::size_t n) {
  if (n + 1 > s.terms())
    throw index_out_of_range("tail_bound: needs x_" + std::to_string(n + 1));
  return rational(integer(2), s.x(n + 1));
}

namespace detail {

// S_N - S_n as an (unreduced) fraction over the common denominator x_N:
// numerator = sum_{j=n+1..N} x_N / x_j, every quotient exact by the Engel
// divisibility chain.  Avoids gcd work on huge integers.
inline integer tail_numerator_over_xN(const engel_state& s, std::size_t n,
                                      std::size_t N) {
  integer acc(0);
  const integer& xN = s.x(N);
  for (std::size_t j = n + 1; j <= N; ++j) acc += xN / s.x(j);
  return acc;
}

}  // namespace detail

// Exact check of 0 < S_N - S_n < 2/x_{n+1}: both comparisons done on
// integers over the common denominator x_N.
inline bool tail_bound_holds(const engel_state& s, std::size_t n,
                             std::size_t N) {
  if (n < 1 || n >= N || N > s.terms())
    throw index_out_of_range("tail_bound_holds: need 1 <= n < N <= terms");
  const integer num = detail::tail_numerator_over_xN(s, n, N);
  return num > 0 && num * s.x(n + 1) < 2 * s.x(N);
}

// Exact check of |S_N - S_n| < x_n^{-5/2+1/10}: cross-multiplied to the
// integer inequality num^10 * x_n^24 < den^10 with S_N - S_n = num/den.
// The common-denominator form is used unreduced; the inequality is
// scale-invariant.
inline bool exponent_floor_holds(const engel_state& s, std::size_t n,
                                 std::size_t N) {
  if (N > s.terms() || n >= N)
    throw index_out_of_range("exponent_floor_holds: need n < N <= terms");
  const integer num = detail::tail_numerator_over_xN(s, n, N);
  const integer& den = s.x(N);
  return ipow(num, integer(10)) * ipow(s.x(n), integer(24)) <
         ipow(den, integer(10));
}

// One row of the empirical irrationality-exponent table:
//   kappa = log(1/(S_N - S_n)) / log(Q_n)   with Q_n = x_n.
// Inputs are exact; the logarithms are double-precision (multiprecision
// values enter through a 63-bit mantissa plus exact bit count, good to well
// past the 12 significant digits reported).
struct kappa_row {
  std::size_t n;
  std::size_t q_digits;  // exact decimal digit count of Q_n
  double kappa;
};

inline std::vector<kappa_row> irr_exponents(const engel_state& s,
                                            std::size_t N) {
  if (N < 4)
    throw insufficient_terms("irr_exponents: N=" + std::to_string(N) +
                             " leaves no n with n + 2 <= N");
  if (N > s.terms())
    throw index_out_of_range("irr_exponents: N=" + std::to_string(N) +
                             " exceeds stored terms");
  std::vector<kappa_row> rows;
  for (std::size_t n = 2; n + 2 <= N; ++n) {
    const integer num = detail::tail_numerator_over_xN(s, n, N);
    const double log_delta = log10_approx(num) - log10_approx(s.x(N));
    const double kappa = -log_delta / log10_approx(s.x(n));
    rows.push_back({n, decimal_digits_exact(s.x(n)), kappa});
  }
  return rows;
}

}  // namespace engelcf

#endif  // ENGELCF_SERIES_HPP_
