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

#ifndef ENGELCF_DECIMAL_HPP_
#define ENGELCF_DECIMAL_HPP_

#include <cstddef>
#include <string>
#include <utility>

#include "engelcf/bigint.hpp"
#include "engelcf/engel.hpp"
#include "engelcf/errors.hpp"
#include "engelcf/rational.hpp"
#include "engelcf/series.hpp"

namespace engelcf {

// Truncated (toward zero) decimal rendering of a rational: the value
// floor(|r| * 10^d) / 10^d with the sign of r.  Never rounds.
struct decimal_string {
  bool negative;          // canonical: false when every digit is zero
  std::string int_part;   // no leading zeros; "0" when |r| < 1
  std::string frac_part;  // exactly the requested d digits
  bool truncated;         // true iff nonzero digits were cut off

  // "-3.141", "0.500", "42" (d == 0 omits the point).
  std::string str() const {
    std::string s;
    if (negative) s += '-';
    s += int_part;
    if (!frac_part.empty()) {
      s += '.';
      s += frac_part;
    }
    return s;
  }
};

// Exact truncated decimal expansion of r with d fractional digits, by
// integer long division of |num| * 10^d by den.
inline decimal_string to_decimal(const rational& r, std::size_t d) {
  const integer shifted = abs(r.num()) * pow10(d);
  const integer scaled = shifted / r.den();
  std::string digits = scaled.str();
  decimal_string out;
  out.truncated = scaled * r.den() != shifted;
  if (digits.size() <= d)
    digits.insert(0, d + 1 - digits.size(), '0');
  out.int_part = digits.substr(0, digits.size() - d);
  out.frac_part = digits.substr(digits.size() - d);
  out.negative = r.sign() < 0 && scaled != 0;
  return out;
}

// digits_of_sum result with its certificate: the partial-sum index n whose
// rendering provably agrees with the full series value, and the exponent e
// of the tail bound actually achieved (2/x_{n+1} < 10^-e).
struct certified_digits {
  decimal_string digits;
  std::size_t certified_n;
  std::size_t tail_exponent;
  engel_state state;  // as extended; reusable by the caller
};

// First d decimal digits (truncated) of the full series value
//
//   S = p/q + sum_{j >= 2} 1/x_j.
//
// Grows the sequence until the tail bound 2/x_{n+1} sinks below
// 10^-(d+2), then renders S_n.  Certification is exact: the truncations of
// the two interval endpoints S_n and S_n + 2/x_{n+1} must agree digit for
// digit (S lies strictly between them and truncation is monotone).  When
// they disagree -- S_n sitting on a 99... / 00... digit boundary -- one
// more term is taken and the check repeated; S is irrational, so this
// terminates.
inline certified_digits digits_of_sum_certified(
    const engel_config& cfg, std::size_t d,
    std::size_t digit_budget = default_digit_budget) {
  engel_state s = init_seed(cfg);
  const integer threshold = 2 * pow10(d + 2);  // need x_{n+1} > this
  std::size_t n = 1;
  for (;;) {
    while (s.terms() < n + 1) s = extend(s, 1, digit_budget);
    if (s.x(n + 1) <= threshold) {
      ++n;
      continue;
    }
    const rational sn = partial_sum(s, n).value;
    const decimal_string lo = to_decimal(sn, d);
    const decimal_string hi = to_decimal(sn + tail_bound(s, n), d);
    if (lo.str() == hi.str()) {
      // Largest e with 2 * 10^e < x_{n+1}, found from the digit count.
      const std::size_t digits_count = decimal_digits_exact(s.x(n + 1));
      std::size_t e = digits_count - 1;
      if (2 * pow10(e) >= s.x(n + 1)) --e;
      return certified_digits{lo, n, e, std::move(s)};
    }
    ++n;  // boundary case: take one more term and re-certify
  }
}

inline decimal_string digits_of_sum(const engel_config& cfg, std::size_t d,
                                    std::size_t digit_budget =
                                        default_digit_budget) {
  return digits_of_sum_certified(cfg, d, digit_budget).digits;
}

}  // namespace engelcf

#endif  // ENGELCF_DECIMAL_HPP_
