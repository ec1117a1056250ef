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

#ifndef ENGELCF_TESTS_TEST_SUPPORT_HPP_
#define ENGELCF_TESTS_TEST_SUPPORT_HPP_

#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "engelcf/engelcf.hpp"

namespace engelcf_tests {

// The rule pool used by every randomized suite: constants, step-dependent,
// and state-dependent shapes.
inline const std::array<std::string, 8>& rule_pool() {
  static const std::array<std::string, 8> rules = {
      "1", "2", "n", "n+1", "x", "x+1", "2*n", "x^2+1"};
  return rules;
}

struct random_case {
  std::string seed_text;  // "p/q", 1 <= p <= q <= 1000, gcd(p, q) = 1
  std::string rule_text;
};

// Deterministic case list: q uniform in [1, 1000], p uniform among the
// residues coprime to q, rule uniform over the pool.  Fixed seed so failures
// reproduce.
inline std::vector<random_case> random_cases(std::size_t count,
                                             std::uint64_t seed = 0x5eed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> q_dist(1, 1000);
  std::uniform_int_distribution<std::size_t> rule_dist(0, rule_pool().size() - 1);
  std::vector<random_case> cases;
  cases.reserve(count);
  while (cases.size() < count) {
    const int q = q_dist(rng);
    std::uniform_int_distribution<int> p_dist(1, q);
    int p = p_dist(rng);
    while (std::gcd(p, q) != 1) p = p == q ? 1 : p + 1;
    cases.push_back({std::to_string(p) + "/" + std::to_string(q),
                     rule_pool()[rule_dist(rng)]});
  }
  return cases;
}

inline engelcf::engel_config make_config(const random_case& c) {
  return engelcf::engel_config{engelcf::parse_rational(c.seed_text),
                               engelcf::parse_zspec(c.rule_text)};
}

inline engelcf::engel_config make_config(const std::string& seed,
                                         const std::string& rule) {
  return engelcf::engel_config{engelcf::parse_rational(seed),
                               engelcf::parse_zspec(rule)};
}

}  // namespace engelcf_tests

#endif  // ENGELCF_TESTS_TEST_SUPPORT_HPP_
