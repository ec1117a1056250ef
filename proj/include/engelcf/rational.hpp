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

#ifndef ENGELCF_RATIONAL_HPP_
#define ENGELCF_RATIONAL_HPP_

#include <cstddef>
#include <string>
#include <utility>

#include "engelcf/bigint.hpp"
#include "engelcf/errors.hpp"

namespace engelcf {

// Exact rational number, always kept in lowest terms with denominator >= 1.
// Zero is canonically 0/1.
class rational {
 public:
  rational() : num_(0), den_(1) {}
  rational(integer num, integer den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }
  explicit rational(integer value) : num_(std::move(value)), den_(1) {}
  explicit rational(long value) : num_(value), den_(1) {}

  const integer& num() const { return num_; }
  const integer& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  // "num/den", or just "num" when den == 1.
  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  friend rational operator+(const rational& a, const rational& b) {
    return rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend rational operator-(const rational& a, const rational& b) {
    return rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend rational operator*(const rational& a, const rational& b) {
    return rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend rational operator/(const rational& a, const rational& b) {
    return rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  rational operator-() const {
    rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  // Comparisons by cross multiplication; denominators are positive, so the
  // inequality direction is preserved.
  friend bool operator==(const rational& a, const rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const rational& a, const rational& b) {
    return !(a == b);
  }
  friend bool operator<(const rational& a, const rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const rational& a, const rational& b) { return b < a; }
  friend bool operator<=(const rational& a, const rational& b) {
    return !(b < a);
  }
  friend bool operator>=(const rational& a, const rational& b) {
    return !(a < b);
  }

 private:
  void normalize() {
    if (den_ == 0) throw std::invalid_argument("rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    integer g = gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  integer num_;
  integer den_;
};

inline rational abs(const rational& r) { return r.sign() < 0 ? -r : r; }

// Parses "P/Q" or a bare integer "P" (optional leading '-' on P only).
// Positions in errors are 1-based offsets into `text`.
inline rational parse_rational(const std::string& text) {
  std::size_t i = 0;
  auto parse_int = [&](bool allow_sign) -> integer {
    bool negative = false;
    if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) {
      negative = text[i] == '-';
      ++i;
    }
    std::size_t digits_begin = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == digits_begin) throw parse_error(i + 1, "expected digits");
    integer v(text.substr(digits_begin, i - digits_begin));
    return negative ? integer(-v) : v;
  };
  if (text.empty()) throw parse_error(1, "empty input");
  integer num = parse_int(/*allow_sign=*/true);
  integer den(1);
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = parse_int(/*allow_sign=*/false);
    if (den == 0) throw parse_error(i, "zero denominator");
  }
  if (i != text.size())
    throw parse_error(i + 1, std::string("unexpected character '") + text[i] + "'");
  return rational(std::move(num), std::move(den));
}

}  // namespace engelcf

#endif  // ENGELCF_RATIONAL_HPP_
