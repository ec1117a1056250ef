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

#ifndef ENGELCF_ENGEL_HPP_
#define ENGELCF_ENGEL_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "engelcf/bigint.hpp"
#include "engelcf/cf.hpp"
#include "engelcf/errors.hpp"
#include "engelcf/rational.hpp"
#include "engelcf/zexpr.hpp"

namespace engelcf {

// Default cap on the decimal size of any single generated term.  The terms
// square at every step, so this bound is reached after only a handful of
// extensions; it exists to turn runaway configurations into a clean error
// instead of an out-of-memory grind.
inline constexpr std::size_t default_digit_budget = 100000;

// Seed + rule defining one generated sequence.
struct engel_config {
  rational seed;        // head value p/q of the series being built
  z_expr rule;          // z_n as an expression in n and x_n
};

class engel_state;
engel_state init_seed(engel_config config);
engel_state extend(const engel_state& s, std::size_t steps,
                   std::size_t digit_budget);

// Immutable snapshot of a generated sequence.
//
// Indexing follows the mathematics, not the containers: x(1) is the seed
// denominator, y(0) the bootstrap factor derived from the seed expansion,
// and for n >= 1
//
//   z_n = rule(n, x_n),   x_{n+1} = x_n * y_{n-1} * (x_n * z_n + 1),
//   y_n = x_{n+1} / x_n   (always an exact division).
//
// The accessors x(n), y(n), z(n) are the only place the 1-based math view
// meets the 0-based storage; everything else goes through them.
class engel_state {
 public:
  const engel_config& config() const { return config_; }

  // Number of generated terms; x(n) is valid for 1 <= n <= terms().
  std::size_t terms() const { return xs_.size(); }

  // Depth of the seed expansion: the even-normalized continued fraction of
  // the seed is [a_0; a_1, ..., a_2k].
  std::size_t k() const { return k_; }

  // The even-normalized seed expansion and its convergent table.
  const continued_fraction& base_cf() const { return base_cf_; }
  const convergent_table& base_convergents() const { return base_convergents_; }

  const integer& x(std::size_t n) const {
    require(n >= 1 && n <= xs_.size(), "x", n);
    return xs_[n - 1];
  }
  // y(0) is the bootstrap factor; y(n) for n >= 1 needs x(n+1) generated.
  const integer& y(std::size_t n) const {
    if (n == 0) return y0_;
    require(n + 1 <= xs_.size(), "y", n);
    return ys_[n - 1];
  }
  // z(n) for 1 <= n <= terms() - 1 (z_n is consumed producing x_{n+1}).
  const integer& z(std::size_t n) const {
    require(n >= 1 && n + 1 <= xs_.size(), "z", n);
    return zs_[n - 1];
  }

  // Raw 0-based views, xs()[0] == x(1) etc.  Handy for whole-sequence checks.
  std::span<const integer> xs() const { return xs_; }
  std::span<const integer> ys() const { return ys_; }
  std::span<const integer> zs() const { return zs_; }

 private:
  engel_state(engel_config config, std::size_t k, continued_fraction base_cf,
              convergent_table base_convergents, integer y0,
              std::vector<integer> xs)
      : config_(std::move(config)),
        k_(k),
        base_cf_(std::move(base_cf)),
        base_convergents_(std::move(base_convergents)),
        y0_(std::move(y0)),
        xs_(std::move(xs)) {}

  static void require(bool ok, const char* what, std::size_t n) {
    if (!ok)
      throw index_out_of_range(std::string(what) + "(" + std::to_string(n) +
                               ") not generated");
  }

  friend engel_state init_seed(engel_config config);
  friend engel_state extend(const engel_state& s, std::size_t steps,
                            std::size_t digit_budget);

  engel_config config_;
  std::size_t k_;
  continued_fraction base_cf_;
  convergent_table base_convergents_;
  integer y0_;
  std::vector<integer> xs_;
  std::vector<integer> ys_;
  std::vector<integer> zs_;
};

// Builds the initial state from a seed p/q: expands the seed, normalizes the
// expansion to even length 2k, and reads off
//
//   x_1 = q,   y_0 = q_{2k-1} + 1
//
// where q_{2k-1} is a convergent denominator of the normalized expansion
// (q_{-1} = 0 when the expansion has the single coefficient a_0).  Integer
// seeds are the classical case: k = 0, y_0 = 1, x_1 = 1.
inline engel_state init_seed(engel_config config) {
  const rational& seed = config.seed;
  continued_fraction base = cf_even_normalize(cf_expand(seed));
  const std::size_t k = base.final_index() / 2;
  convergent_table table = convergents(base);
  integer y0 =
      (k == 0 ? integer(0)
              : table.q(static_cast<std::ptrdiff_t>(2 * k) - 1)) +
      1;
  std::vector<integer> xs;
  xs.push_back(seed.den());
  return engel_state(std::move(config), k, std::move(base), std::move(table),
                     std::move(y0), std::move(xs));
}

namespace detail {

// Decimal-size guard for x_{n+1} = x_n * y_{n-1} * (x_n * z_n + 1), using
// bit-length digit estimates so nothing large is computed on the failure
// path.  The estimate can overshoot the true size by a few digits; being
// that conservative near the cap is fine.
inline void check_budget(const integer& xn, const integer& yprev,
                         const integer& zn, std::size_t step,
                         std::size_t budget) {
  const std::size_t projected = 2 * decimal_digits_estimate(xn) +
                                decimal_digits_estimate(yprev) +
                                decimal_digits_estimate(zn) + 1;
  if (projected > budget) throw digit_budget_exceeded(step + 1, projected, budget);
}

}  // namespace detail

// Returns a copy of s with `steps` more terms.  Throws non_positive_z if the
// rule drops to zero, digit_budget_exceeded if the next term would blow past
// digit_budget decimal digits; in both cases the input state is untouched.
inline engel_state extend(const engel_state& s, std::size_t steps,
                          std::size_t digit_budget = default_digit_budget) {
  engel_state r = s;
  for (std::size_t i = 0; i < steps; ++i) {
    const std::size_t n = r.xs_.size();  // producing x_{n+1}
    const integer& xn = r.xs_.back();
    integer zn = eval_z(r.config_.rule, n, xn);
    const integer& yprev = n == 1 ? r.y0_ : r.ys_.back();
    detail::check_budget(xn, yprev, zn, n, digit_budget);
    integer factor = xn * zn + 1;
    integer ynext = yprev * factor;        // y_n = y_{n-1} (x_n z_n + 1)
    integer xnext = xn * ynext;            // x_{n+1} = x_n y_n
    r.zs_.push_back(std::move(zn));
    r.ys_.push_back(std::move(ynext));
    r.xs_.push_back(std::move(xnext));
  }
  return r;
}

// Verifies the second-order form of the construction on raw sequences:
//
//   x_{n+1} x_{n-1} == x_n^2 (z_n x_n + 1)   for every interior n,
//
// with xs[0] == x_1 and zs[0] == z_1.  This is the cross-check an external
// auditor can run without knowing y_0; it holds for genuine sequences and
// breaks if any single term is tampered with.
inline bool check_recurrence(std::span<const integer> xs,
                             std::span<const integer> zs) {
  for (std::size_t n = 2; n + 1 <= xs.size(); ++n) {
    const integer& xprev = xs[n - 2];
    const integer& xn = xs[n - 1];
    const integer& xnext = xs[n];
    const integer& zn = zs[n - 1];
    if (xnext * xprev != xn * xn * (zn * xn + 1)) return false;
  }
  return true;
}

inline bool check_recurrence(const engel_state& s) {
  return check_recurrence(s.xs(), s.zs());
}

// Growth floor x_{n+1}^2 > x_n^5, checked exactly, for every n >= from.
// Generated sequences satisfy it from n == 3 on.
inline bool check_growth(std::span<const integer> xs, std::size_t from = 3) {
  for (std::size_t n = from; n + 1 <= xs.size(); ++n) {
    const integer& xn = xs[n - 1];
    const integer& xnext = xs[n];
    if (!(xnext * xnext > xn * xn * xn * xn * xn)) return false;
  }
  return true;
}

inline bool check_growth(const engel_state& s, std::size_t from = 3) {
  return check_growth(s.xs(), from);
}

}  // namespace engelcf

#endif  // ENGELCF_ENGEL_HPP_
