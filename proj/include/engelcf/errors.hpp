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

#ifndef ENGELCF_ERRORS_HPP_
#define ENGELCF_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace engelcf {

// Base class for all library-specific failures.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (seed fractions, z-rule expressions).
class parse_error : public error {
 public:
  parse_error(std::size_t position, const std::string& message)
      : error("parse error at position " + std::to_string(position) + ": " +
              message),
        position_(position) {}

  // 1-based character offset of the offending token.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A z-rule evaluated to zero (or below) at some step; the sequence
// construction requires z_n >= 1 for every n.
class non_positive_z : public error {
 public:
  explicit non_positive_z(std::size_t step)
      : error("z-rule is not positive at step n=" + std::to_string(step)),
        step_(step) {}

  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

// Extending the sequence would overflow the configured decimal-digit budget.
class digit_budget_exceeded : public error {
 public:
  digit_budget_exceeded(std::size_t step, std::size_t projected_digits,
                        std::size_t budget)
      : error("digit budget exceeded at step n=" + std::to_string(step) +
              ": next term needs ~" + std::to_string(projected_digits) +
              " digits, budget is " + std::to_string(budget)),
        step_(step),
        projected_digits_(projected_digits),
        budget_(budget) {}

  std::size_t step() const { return step_; }
  std::size_t projected_digits() const { return projected_digits_; }
  std::size_t budget() const { return budget_; }

 private:
  std::size_t step_;
  std::size_t projected_digits_;
  std::size_t budget_;
};

// An index addressed a term the caller never generated.
class index_out_of_range : public error {
 public:
  using error::error;
};

// An operation needs more generated terms than the state holds.
class insufficient_terms : public error {
 public:
  using error::error;
};

}  // namespace engelcf

#endif  // ENGELCF_ERRORS_HPP_
