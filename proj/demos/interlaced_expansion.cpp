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

// Walks the classic example end to end: seed 6/7 with z_n = n, print the
// terms, the interlaced continued fraction of the partial sum, and twenty
// certified decimal digits of the full series value.

#include <iostream>

#include "engelcf/engelcf.hpp"

int main() {
  using namespace engelcf;

  engel_config cfg{parse_rational("6/7"), parse_zspec("n")};
  engel_state s = extend(init_seed(cfg), 5);

  std::cout << "seed 6/7 expands to " << s.base_cf().str() << "\n\n";

  std::cout << "terms x_n:\n";
  for (std::size_t n = 1; n <= s.terms(); ++n)
    std::cout << "  x_" << n << " = " << s.x(n) << "\n";

  std::cout << "\npartial sum S_5 = " << partial_sum(s, 5).value.str() << "\n";
  std::cout << "its interlaced expansion: " << predicted_cf(s, 5).str()
            << "\n";
  std::cout << "independent re-expansion:  "
            << cf_expand(partial_sum(s, 5).value).str() << "\n";

  theorem_report report = verify_theorem(s, 5);
  std::cout << "\nidentity checks:\n";
  for (const auto& check : report.checks)
    std::cout << "  " << check.name << ": " << (check.pass ? "pass" : "FAIL")
              << "\n";

  certified_digits digits = digits_of_sum_certified(cfg, 20);
  std::cout << "\nS = " << digits.digits.str() << "... (certified by S_"
            << digits.certified_n << ", tail < 10^-"
            << digits.tail_exponent << ")\n";
  return report.all_pass() ? 0 : 1;
}
