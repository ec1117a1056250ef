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

#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "engelcf/cf.hpp"

using engelcf::cf_even_normalize;
using engelcf::cf_eval;
using engelcf::cf_expand;
using engelcf::continued_fraction;
using engelcf::convergent_table;
using engelcf::convergents;
using engelcf::det_check;
using engelcf::integer;
using engelcf::rational;

namespace {

continued_fraction cf(std::vector<long> coeffs) {
  std::vector<integer> v(coeffs.begin(), coeffs.end());
  return continued_fraction(std::move(v));
}

rational rat(long p, long q) { return rational(integer(p), integer(q)); }

}  // namespace

TEST_CASE("cf_expand produces the Euclidean expansion") {
  REQUIRE(cf_expand(rat(6, 7)).str() == "[0;1,6]");
  REQUIRE(cf_expand(rat(1, 1)).str() == "[1]");
  REQUIRE(cf_expand(rat(355, 113)).str() == "[3;7,16]");
  REQUIRE(cf_expand(rat(7, 3)).str() == "[2;3]");
}

TEST_CASE("cf_expand floors negative values") {
  REQUIRE(cf_expand(rat(-1, 2)).str() == "[-1;2]");
  REQUIRE(cf_expand(rat(-7, 3)).str() == "[-3;1,2]");
}

TEST_CASE("canonical expansions never end in 1") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-500, 500);
  std::uniform_int_distribution<long> den(1, 500);
  for (int i = 0; i < 200; ++i) {
    const continued_fraction c = cf_expand(rat(dist(rng), den(rng)));
    if (c.size() > 1) REQUIRE(c[c.final_index()] >= 2);
  }
}

TEST_CASE("cf construction rejects nonpositive partial quotients") {
  REQUIRE_THROWS_AS(cf({2, 0, 3}), std::invalid_argument);
  REQUIRE_THROWS_AS(cf({2, -1}), std::invalid_argument);
  REQUIRE_THROWS_AS(continued_fraction(std::vector<integer>{}),
                    std::invalid_argument);
  REQUIRE_NOTHROW(cf({-3, 1, 2}));
}

TEST_CASE("cf_even_normalize flips the final index parity only when odd") {
  REQUIRE(cf_even_normalize(cf({0, 1, 6})).str() == "[0;1,6]");
  REQUIRE(cf_even_normalize(cf({2, 3})).str() == "[2;2,1]");
  REQUIRE(cf_even_normalize(cf({0, 1, 5, 1})).str() == "[0;1,6]");
  REQUIRE(cf_even_normalize(cf({0, 1})).str() == "[1]");
  REQUIRE(cf_even_normalize(cf({7})).str() == "[7]");
}

TEST_CASE("cf_even_normalize preserves the value") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-300, 300);
  std::uniform_int_distribution<long> den(1, 300);
  for (int i = 0; i < 200; ++i) {
    const rational r = rat(num(rng), den(rng));
    const continued_fraction e = cf_even_normalize(cf_expand(r));
    REQUIRE(cf_eval(e) == r);
    REQUIRE(e.final_index() % 2 == 0);
  }
}

TEST_CASE("convergents carry the virtual first row") {
  const convergent_table t = convergents(cf({0, 1, 6}));
  REQUIRE(t.rows_count() == 4);
  REQUIRE(t.p(-1) == 1);
  REQUIRE(t.q(-1) == 0);
  REQUIRE(t.p(0) == 0);
  REQUIRE(t.q(0) == 1);
  REQUIRE(t.p(2) == 6);
  REQUIRE(t.q(2) == 7);
  REQUIRE_THROWS_AS(t.p(3), std::out_of_range);
  REQUIRE_THROWS_AS(t.q(-2), std::out_of_range);
}

TEST_CASE("cf_eval recovers the expanded rational") {
  REQUIRE(cf_eval(cf({0, 1, 6, 2, 7})) == rat(97, 112));
  REQUIRE(cf_eval(cf({3, 7, 16})) == rat(355, 113));
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> num(-400, 400);
  std::uniform_int_distribution<long> den(1, 400);
  for (int i = 0; i < 200; ++i) {
    const rational r = rat(num(rng), den(rng));
    REQUIRE(cf_eval(cf_expand(r)) == r);
  }
}

TEST_CASE("det_check accepts genuine tables and spots corruption") {
  const convergent_table good = convergents(cf({0, 1, 6, 2, 7}));
  REQUIRE(det_check(good));

  std::vector<convergent_table::row> rows = good.rows();
  rows[3].q += 1;  // (6, 7) -> (6, 8)
  REQUIRE_FALSE(det_check(convergent_table(std::move(rows))));
}

TEST_CASE("convergent tables require the virtual row") {
  REQUIRE_THROWS_AS(
      convergent_table({{integer(2), integer(1)}, {integer(3), integer(1)}}),
      std::invalid_argument);
}
