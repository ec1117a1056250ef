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

#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "engelcf/zexpr.hpp"

using engelcf::eval_z;
using engelcf::integer;
using engelcf::non_positive_z;
using engelcf::parse_error;
using engelcf::parse_zspec;
using engelcf::z_expr;

namespace {

integer ev(const std::string& text, long n, long x) {
  return parse_zspec(text).eval(integer(n), integer(x));
}

}  // namespace

TEST_CASE("z-rule evaluation respects precedence and associativity") {
  REQUIRE(ev("1+2*3", 0, 0) == 7);
  REQUIRE(ev("(1+2)*3", 0, 0) == 9);
  REQUIRE(ev("2*n+1", 5, 0) == 11);
  REQUIRE(ev("2*(n+1)", 5, 0) == 12);
  REQUIRE(ev("x^2+1", 0, 7) == 50);
  REQUIRE(ev("2^3^2", 0, 0) == 64);  // left-assoc: (2^3)^2
  REQUIRE(ev("n*x*n", 3, 5) == 45);
  REQUIRE(ev("x^0", 0, 9) == 1);
  REQUIRE(ev("0^0", 0, 0) == 1);
}

TEST_CASE("z-rule whitespace is insignificant") {
  REQUIRE(parse_zspec(" x ^ 2 + 1 ") == parse_zspec("x^2+1"));
  REQUIRE(parse_zspec("2 * n") == parse_zspec("2*n"));
}

TEST_CASE("z-rule str round-trips structurally") {
  for (const char* text :
       {"1", "2", "n", "n+1", "x", "x+1", "2*n", "x^2+1", "(n+1)*x",
        "(x+1)^3", "n*x*n+4", "2^3^2", "n*(x+2)*n", "(n+n)*(x+x)"}) {
    const z_expr e = parse_zspec(text);
    REQUIRE(parse_zspec(e.str()) == e);
  }
  REQUIRE(parse_zspec("((n))").str() == "n");
  REQUIRE(parse_zspec("(n+1)*x").str() == "(n+1)*x");
}

TEST_CASE("z-rule parser reports positions for bad input") {
  const auto position_of = [](const std::string& text) -> std::size_t {
    try {
      parse_zspec(text);
    } catch (const parse_error& e) {
      return e.position();
    }
    return 0;
  };
  REQUIRE(position_of("") == 1);
  REQUIRE(position_of("n+") == 3);
  REQUIRE(position_of("y") == 1);
  REQUIRE(position_of("nx") == 1);
  REQUIRE(position_of("x^n") == 3);      // variable exponent
  REQUIRE(position_of("x^(2)") == 3);    // parenthesized exponent
  REQUIRE(position_of("x^-1") == 3);     // negative literal
  REQUIRE(position_of("-1") == 1);       // negative literal at toplevel
  REQUIRE(position_of("(n+1") == 5);
  REQUIRE(position_of("n)") == 2);
  REQUIRE(position_of("3 4") == 3);
}

TEST_CASE("eval_z enforces positivity with the failing step") {
  const z_expr rule = parse_zspec("n");
  REQUIRE(eval_z(rule, 3, integer(0)) == 3);
  try {
    eval_z(rule, 0, integer(5));
    FAIL("expected non_positive_z");
  } catch (const non_positive_z& e) {
    REQUIRE(e.step() == 0);
  }
}

TEST_CASE("z-rule handles large exponent growth exactly") {
  // 10^20 overflows 64-bit; the evaluator must not.
  REQUIRE(ev("x^4", 0, 100000) == integer("100000000000000000000"));
}
