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

#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace engelcf;
using engelcf_tests::make_config;
using engelcf_tests::random_cases;

TEST_CASE("seed 6/7 initializes from its even expansion") {
  const engel_state s = init_seed(make_config("6/7", "n"));
  REQUIRE(s.base_cf().str() == "[0;1,6]");
  REQUIRE(s.k() == 1);
  REQUIRE(s.y(0) == 2);  // q_1 + 1
  REQUIRE(s.x(1) == 7);
  REQUIRE(s.terms() == 1);
}

TEST_CASE("integer seeds fall back to the single-coefficient expansion") {
  const engel_state s = init_seed(make_config("1/1", "1"));
  REQUIRE(s.base_cf().str() == "[1]");
  REQUIRE(s.k() == 0);
  REQUIRE(s.y(0) == 1);  // q_{-1} + 1
  REQUIRE(s.x(1) == 1);
}

TEST_CASE("seeds with odd canonical expansions get normalized") {
  // 7/3 = [2;3] -> [2;2,1]; k = 1, q_1 = convergent denominator of [2;2].
  const engel_state s = init_seed(make_config("7/3", "1"));
  REQUIRE(s.base_cf().str() == "[2;2,1]");
  REQUIRE(s.k() == 1);
  REQUIRE(s.y(0) == 3);
  REQUIRE(s.x(1) == 3);
}

TEST_CASE("extend reproduces the classic quadratic-growth sequence") {
  const engel_state s = extend(init_seed(make_config("6/7", "n")), 4);
  const std::vector<const char*> expected = {
      "7", "112", "403200", "1755760043520000",
      "53695136666462381094317154204367872000000"};
  REQUIRE(s.terms() == 5);
  for (std::size_t n = 1; n <= 5; ++n)
    REQUIRE(s.x(n).str() == expected[n - 1]);
  REQUIRE(s.y(1) == 16);
  REQUIRE(s.y(2) == 3600);
  REQUIRE(s.z(1) == 1);
  REQUIRE(s.z(4) == 4);
}

TEST_CASE("extend reproduces the constant-rule doubling sequence") {
  const engel_state s = extend(init_seed(make_config("1/1", "1")), 5);
  const std::vector<const char*> expected = {
      "1", "2", "12", "936", "68408496", "342022190843338960032"};
  for (std::size_t n = 1; n <= 6; ++n)
    REQUIRE(s.x(n).str() == expected[n - 1]);
}

TEST_CASE("extend leaves the input state untouched") {
  const engel_state s1 = extend(init_seed(make_config("6/7", "n")), 1);
  const engel_state s2 = extend(s1, 2);
  REQUIRE(s1.terms() == 2);
  REQUIRE(s2.terms() == 4);
  REQUIRE(s2.x(2) == s1.x(2));
}

TEST_CASE("state indexing guards unreached terms") {
  const engel_state s = extend(init_seed(make_config("6/7", "n")), 2);
  REQUIRE_THROWS_AS(s.x(0), index_out_of_range);
  REQUIRE_THROWS_AS(s.x(4), index_out_of_range);
  REQUIRE_THROWS_AS(s.y(3), index_out_of_range);
  REQUIRE_THROWS_AS(s.z(3), index_out_of_range);
  REQUIRE_NOTHROW(s.z(2));
}

TEST_CASE("a rule hitting zero raises non_positive_z with the step") {
  engel_state s = init_seed(make_config("6/7", "0"));
  try {
    extend(s, 1);
    FAIL("expected non_positive_z");
  } catch (const non_positive_z& e) {
    REQUIRE(e.step() == 1);
  }
}

TEST_CASE("the digit budget stops runaway growth with a projection") {
  const engel_state s = init_seed(make_config("6/7", "x^2+1"));
  try {
    extend(s, 50, 10000);
    FAIL("expected digit_budget_exceeded");
  } catch (const digit_budget_exceeded& e) {
    REQUIRE(e.budget() == 10000);
    REQUIRE(e.projected_digits() > 10000);
    REQUIRE(e.step() >= 5);
  }
}

TEST_CASE("recurrence and growth checks hold on generated sequences") {
  for (const auto& c : random_cases(25)) {
    const engel_state s = extend(init_seed(make_config(c)), 5);
    CAPTURE(c.seed_text, c.rule_text);
    REQUIRE(check_recurrence(s));
    REQUIRE(check_growth(s));
  }
}

TEST_CASE("recurrence check spots a corrupted term") {
  const engel_state s = extend(init_seed(make_config("6/7", "n")), 4);
  std::vector<integer> xs(s.xs().begin(), s.xs().end());
  std::vector<integer> zs(s.zs().begin(), s.zs().end());
  xs[2] += 1;  // corrupt x_3
  REQUIRE_FALSE(check_recurrence(xs, zs));
}

TEST_CASE("divisibility chain holds along every generated sequence") {
  for (const auto& c : random_cases(25, 0xd1f)) {
    const engel_state s = extend(init_seed(make_config(c)), 5);
    for (std::size_t n = 1; n + 1 <= s.terms(); ++n) {
      REQUIRE(s.x(n + 1) % s.x(n) == 0);
      REQUIRE(s.x(n + 1) / s.x(n) == s.y(n));
    }
  }
}
