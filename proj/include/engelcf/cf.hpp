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

#ifndef ENGELCF_CF_HPP_
#define ENGELCF_CF_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "engelcf/bigint.hpp"
#include "engelcf/rational.hpp"

namespace engelcf {

// Finite simple continued fraction [a_0; a_1, ..., a_m].  a_0 may be any
// integer; every later coefficient must be >= 1.  Construction validates the
// invariant, so an instance is always well formed.
class continued_fraction {
 public:
  explicit continued_fraction(std::vector<integer> coefficients)
      : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty())
      throw std::invalid_argument("continued fraction needs a_0");
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      if (coeffs_[i] < 1)
        throw std::invalid_argument("continued fraction coefficient a_" +
                                    std::to_string(i) + " must be >= 1");
    }
  }

  const std::vector<integer>& coefficients() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  // Index of the last coefficient, m in [a_0; a_1, ..., a_m].
  std::size_t final_index() const { return coeffs_.size() - 1; }
  const integer& operator[](std::size_t i) const { return coeffs_[i]; }

  // "[a0;a1,a2,...]"; "[a0]" when there are no partial quotients.
  std::string str() const {
    std::string s = "[" + coeffs_[0].str();
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      s += (i == 1 ? ";" : ",") + coeffs_[i].str();
    return s + "]";
  }

  // Structural equality.  Two expansions of the same rational that differ in
  // the final-coefficient split compare unequal here; compare values with
  // cf_eval if that is what you mean.
  friend bool operator==(const continued_fraction& a,
                         const continued_fraction& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const continued_fraction& a,
                         const continued_fraction& b) {
    return !(a == b);
  }

 private:
  std::vector<integer> coeffs_;
};

// Convergent numerators/denominators of a continued fraction, with the
// conventional virtual row (p_{-1}, q_{-1}) = (1, 0) stored first.  Row r of
// the table therefore holds the convergent of index r - 1.
class convergent_table {
 public:
  struct row {
    integer p;
    integer q;
    friend bool operator==(const row&, const row&) = default;
  };

  // Rows as stored: rows[0] must be the virtual (1, 0) row.
  explicit convergent_table(std::vector<row> rows) : rows_(std::move(rows)) {
    if (rows_.empty() || rows_[0].p != 1 || rows_[0].q != 0)
      throw std::invalid_argument(
          "convergent table must start with the virtual row (1, 0)");
  }

  // Number of stored rows, including the virtual one.
  std::size_t rows_count() const { return rows_.size(); }
  const row& at(std::size_t r) const { return rows_.at(r); }
  const std::vector<row>& rows() const { return rows_; }

  // Convergent index of the last row: the table of [a_0; ...; a_m] has
  // final_cf_index() == m.
  std::ptrdiff_t final_cf_index() const {
    return static_cast<std::ptrdiff_t>(rows_.size()) - 2;
  }

  // p_i / q_i by convergent index, i in [-1, final_cf_index()].
  const integer& p(std::ptrdiff_t i) const { return row_for(i).p; }
  const integer& q(std::ptrdiff_t i) const { return row_for(i).q; }

 private:
  const row& row_for(std::ptrdiff_t i) const {
    if (i < -1 || i > final_cf_index())
      throw std::out_of_range("convergent index " + std::to_string(i) +
                              " out of range");
    return rows_[static_cast<std::size_t>(i + 1)];
  }

  std::vector<row> rows_;
};

// Canonical (Euclidean) expansion of a rational: floor division at every
// step, so a_i >= 1 for i >= 1 and the final coefficient is >= 2 unless the
// expansion is the single coefficient [a_0].  Works for any sign of r.
inline continued_fraction cf_expand(const rational& r) {
  std::vector<integer> coeffs;
  integer p = r.num();
  integer q = r.den();
  while (q != 0) {
    integer a = floor_div(p, q);
    coeffs.push_back(a);
    integer rem = p - a * q;  // p mod q, in [0, q)
    p = std::move(q);
    q = std::move(rem);
  }
  return continued_fraction(std::move(coeffs));
}

// Rewrites the expansion so the final index is even, using the identity
// [..., a_m] == [..., a_m - 1, 1] (for a_m >= 2) == [..., a_m + 1] (when the
// final coefficient is 1).  The value is unchanged.
inline continued_fraction cf_even_normalize(const continued_fraction& c) {
  std::vector<integer> coeffs = c.coefficients();
  const std::size_t m = coeffs.size() - 1;
  if (m % 2 == 0) return c;
  if (coeffs[m] == 1) {
    // Merge the trailing 1 into the previous coefficient.
    coeffs.pop_back();
    coeffs.back() += 1;
  } else {
    coeffs[m] -= 1;
    coeffs.push_back(integer(1));
  }
  return continued_fraction(std::move(coeffs));
}

// Full convergent table of c, virtual row included:
//   p_i = a_i * p_{i-1} + p_{i-2},  q_i likewise.
inline convergent_table convergents(const continued_fraction& c) {
  std::vector<convergent_table::row> rows;
  rows.reserve(c.size() + 1);
  rows.push_back({integer(1), integer(0)});
  integer p_prev(0), q_prev(1);  // (p_{-2}, q_{-2}) seeds for i == 0
  for (std::size_t i = 0; i < c.size(); ++i) {
    integer p = c[i] * rows.back().p + p_prev;
    integer q = c[i] * rows.back().q + q_prev;
    p_prev = rows.back().p;
    q_prev = rows.back().q;
    rows.push_back({std::move(p), std::move(q)});
  }
  return convergent_table(std::move(rows));
}

// Value of the continued fraction as a rational in lowest terms.
inline rational cf_eval(const continued_fraction& c) {
  const convergent_table t = convergents(c);
  return rational(t.p(t.final_cf_index()), t.q(t.final_cf_index()));
}

// Checks p_i q_{i-1} - p_{i-1} q_i == (-1)^{i+1} for every i >= 0 in the
// table.  A genuine convergent table always passes; a corrupted one fails.
inline bool det_check(const convergent_table& t) {
  for (std::ptrdiff_t i = 0; i <= t.final_cf_index(); ++i) {
    const integer det = t.p(i) * t.q(i - 1) - t.p(i - 1) * t.q(i);
    if (det != (i % 2 == 0 ? integer(-1) : integer(1))) return false;
  }
  return true;
}

}  // namespace engelcf

#endif  // ENGELCF_CF_HPP_
