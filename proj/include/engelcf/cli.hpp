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

#ifndef ENGELCF_CLI_HPP_
#define ENGELCF_CLI_HPP_

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdio>
#include <exception>
#include <ostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "engelcf/cf.hpp"
#include "engelcf/decimal.hpp"
#include "engelcf/engel.hpp"
#include "engelcf/errors.hpp"
#include "engelcf/rational.hpp"
#include "engelcf/series.hpp"
#include "engelcf/zexpr.hpp"

namespace engelcf::cli {

// Stable exit-code contract.
inline constexpr int exit_ok = 0;
inline constexpr int exit_identity = 1;      // a checked identity failed
inline constexpr int exit_parse = 2;         // bad seed/rule/flag text
inline constexpr int exit_positivity = 3;    // z-rule dropped to zero
inline constexpr int exit_budget = 4;        // digit budget exceeded
inline constexpr int exit_insufficient = 5;  // not enough terms for the ask

namespace detail {

using json = nlohmann::ordered_json;

inline std::string format_kappa(double kappa) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", kappa);
  return buf;
}

inline json cf_to_json(const continued_fraction& c) {
  json arr = json::array();
  for (const integer& a : c.coefficients()) arr.push_back(a.str());
  return arr;
}

// Sequence echo: every generated term as a decimal string (terms overflow
// 64 bits almost immediately, so strings are the only safe carrier).
inline json state_to_json(const engel_state& s) {
  json xs = json::array(), ys = json::array(), zs = json::array();
  ys.push_back(s.y(0).str());
  for (std::size_t n = 1; n <= s.terms(); ++n) {
    xs.push_back(s.x(n).str());
    if (n + 1 <= s.terms()) {
      ys.push_back(s.y(n).str());
      zs.push_back(s.z(n).str());
    }
  }
  return json{{"x", std::move(xs)}, {"y", std::move(ys)}, {"z", std::move(zs)}};
}

struct verify_case_result {
  std::string seed_text;
  std::string rule_text;
  std::vector<std::pair<std::string, bool>> checks;
  std::string first_failure;
  bool pass = true;

  void add(const std::string& name, bool ok, const std::string& why = "") {
    checks.emplace_back(name, ok);
    if (!ok) {
      pass = false;
      if (first_failure.empty())
        first_failure = why.empty() ? name : name + ": " + why;
    }
  }
};

// The whole verification battery for one (seed, rule) pair: the interlaced
// expansion against the partial sums for every depth, then the
// sequence-level recurrence, growth, and determinant checks.
inline verify_case_result run_verify_case(const std::string& seed_text,
                                          const std::string& rule_text,
                                          std::size_t terms,
                                          std::size_t digit_budget) {
  verify_case_result result;
  result.seed_text = seed_text;
  result.rule_text = rule_text;
  engel_config cfg{parse_rational(seed_text), parse_zspec(rule_text)};
  engel_state s = extend(init_seed(std::move(cfg)), terms - 1, digit_budget);
  for (std::size_t n = 1; n <= terms; ++n) {
    theorem_report report = verify_theorem(s, n);
    result.add("theorem n=" + std::to_string(n), report.all_pass(),
               report.first_failure);
  }
  result.add("recurrence", check_recurrence(s));
  result.add("growth", check_growth(s));
  result.add("determinant", det_check(s.base_convergents()));
  return result;
}

struct options {
  std::vector<std::string> seeds;
  std::vector<std::string> rules;
  std::size_t terms = 6;
  std::size_t digits = 20;
  std::size_t max_digits = default_digit_budget;
  unsigned jobs = 1;
  bool json_output = false;

  const std::string& seed() const { return seeds.front(); }
  const std::string& rule() const { return rules.front(); }

  engel_config config() const {
    return engel_config{parse_rational(seed()), parse_zspec(rule())};
  }
};

class timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

inline int cmd_expand(const options& opt, std::ostream& out) {
  timer t;
  const rational seed = parse_rational(opt.seed());
  const continued_fraction canonical = cf_expand(seed);
  const continued_fraction even = cf_even_normalize(canonical);
  if (opt.json_output) {
    json record{{"command", "expand"},
                {"config", {{"seed", opt.seed()}}},
                {"canonical", cf_to_json(canonical)},
                {"even", cf_to_json(even)},
                {"timing_ms", t.ms()}};
    out << record.dump(2) << "\n";
  } else {
    out << "canonical " << canonical.str() << "\n";
    out << "even " << even.str() << "\n";
  }
  return exit_ok;
}

inline int cmd_generate(const options& opt, std::ostream& out) {
  timer t;
  engel_state s =
      extend(init_seed(opt.config()), opt.terms - 1, opt.max_digits);
  // Row n lists z_n, y_{n-1}, x_n.  The final row's z has not been consumed
  // by any extension yet, so evaluate it on the spot (raw: a nonpositive
  // value here is display-only, not an error).
  const integer last_z = s.config().rule.eval(
      integer(static_cast<unsigned long>(opt.terms)), s.x(opt.terms));
  if (opt.json_output) {
    json rows = json::array();
    for (std::size_t n = 1; n <= opt.terms; ++n) {
      rows.push_back(json{
          {"n", n},
          {"z", (n < opt.terms ? s.z(n) : last_z).str()},
          {"y_prev", s.y(n - 1).str()},
          {"x", s.x(n).str()}});
    }
    json record{{"command", "generate"},
                {"config",
                 {{"seed", opt.seed()},
                  {"z", opt.rule()},
                  {"terms", opt.terms},
                  {"max_digits", opt.max_digits}}},
                {"rows", std::move(rows)},
                {"sequences", state_to_json(s)},
                {"timing_ms", t.ms()}};
    out << record.dump(2) << "\n";
  } else {
    for (std::size_t n = 1; n <= opt.terms; ++n) {
      out << n << " " << (n < opt.terms ? s.z(n) : last_z).str() << " "
          << s.y(n - 1).str() << " " << s.x(n).str() << "\n";
    }
  }
  return exit_ok;
}

inline int cmd_verify(const options& opt, std::ostream& out) {
  timer t;
  const std::size_t cases = opt.seeds.size();
  std::vector<verify_case_result> results(cases);
  const unsigned jobs =
      std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(cases)));
  if (jobs == 1) {
    for (std::size_t i = 0; i < cases; ++i)
      results[i] = run_verify_case(opt.seeds[i], opt.rules[i], opt.terms,
                                   opt.max_digits);
  } else {
    // Block-partition the independent cases; each worker touches only its
    // own slots.  First exception (if any) is rethrown after the join.
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < cases; i += jobs)
            results[i] = run_verify_case(opt.seeds[i], opt.rules[i],
                                         opt.terms, opt.max_digits);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (std::thread& th : workers) th.join();
    for (const std::exception_ptr& e : errors)
      if (e) std::rethrow_exception(e);
  }

  bool all_pass = true;
  for (const verify_case_result& r : results) all_pass = all_pass && r.pass;

  if (opt.json_output) {
    json case_records = json::array();
    for (const verify_case_result& r : results) {
      json checks = json::object();
      for (const auto& [name, ok] : r.checks) checks[name] = ok;
      json rec{{"seed", r.seed_text},
               {"z", r.rule_text},
               {"checks", std::move(checks)},
               {"pass", r.pass}};
      if (!r.pass) rec["first_failure"] = r.first_failure;
      case_records.push_back(std::move(rec));
    }
    json record{{"command", "verify"},
                {"config",
                 {{"terms", opt.terms},
                  {"max_digits", opt.max_digits},
                  {"jobs", opt.jobs}}},
                {"cases", std::move(case_records)},
                {"pass", all_pass},
                {"timing_ms", t.ms()}};
    out << record.dump(2) << "\n";
  } else {
    for (const verify_case_result& r : results) {
      if (results.size() > 1) out << "case " << r.seed_text << " " << r.rule_text << "\n";
      for (const auto& [name, ok] : r.checks)
        out << name << " " << (ok ? "PASS" : "FAIL") << "\n";
      if (!r.pass) out << "first_failure " << r.first_failure << "\n";
    }
    out << "result " << (all_pass ? "PASS" : "FAIL") << "\n";
  }
  return all_pass ? exit_ok : exit_identity;
}

inline int cmd_digits(const options& opt, std::ostream& out) {
  timer t;
  certified_digits result =
      digits_of_sum_certified(opt.config(), opt.digits, opt.max_digits);
  if (opt.json_output) {
    json record{{"command", "digits"},
                {"config",
                 {{"seed", opt.seed()},
                  {"z", opt.rule()},
                  {"digits", opt.digits},
                  {"max_digits", opt.max_digits}}},
                {"value", result.digits.str()},
                {"certified_n", result.certified_n},
                {"tail_exponent", result.tail_exponent},
                {"sequences", state_to_json(result.state)},
                {"timing_ms", t.ms()}};
    out << record.dump(2) << "\n";
  } else {
    out << "value " << result.digits.str() << "\n";
    out << "certified_n " << result.certified_n << "\n";
    out << "tail_exponent " << result.tail_exponent << "\n";
  }
  return exit_ok;
}

inline int cmd_cfseries(const options& opt, std::ostream& out) {
  timer t;
  engel_state s =
      extend(init_seed(opt.config()), opt.terms - 1, opt.max_digits);
  const continued_fraction cf = predicted_cf(s, opt.terms);
  if (opt.json_output) {
    json record{{"command", "cfseries"},
                {"config",
                 {{"seed", opt.seed()},
                  {"z", opt.rule()},
                  {"terms", opt.terms},
                  {"max_digits", opt.max_digits}}},
                {"coefficients", cf_to_json(cf)},
                {"sequences", state_to_json(s)},
                {"timing_ms", t.ms()}};
    out << record.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < cf.size(); ++i)
      out << "a_" << i << " " << cf[i].str() << "\n";
  }
  return exit_ok;
}

inline int cmd_kappa(const options& opt, std::ostream& out) {
  timer t;
  if (opt.terms < 4)
    throw insufficient_terms(
        "kappa needs at least 4 terms (rows cover n = 2..N-2)");
  engel_state s =
      extend(init_seed(opt.config()), opt.terms - 1, opt.max_digits);
  const std::vector<kappa_row> rows = irr_exponents(s, opt.terms);
  if (opt.json_output) {
    json jrows = json::array();
    for (const kappa_row& r : rows)
      jrows.push_back(json{{"n", r.n},
                           {"q_digits", r.q_digits},
                           {"kappa", format_kappa(r.kappa)}});
    json record{{"command", "kappa"},
                {"config",
                 {{"seed", opt.seed()},
                  {"z", opt.rule()},
                  {"terms", opt.terms},
                  {"max_digits", opt.max_digits}}},
                {"rows", std::move(jrows)},
                {"sequences", state_to_json(s)},
                {"timing_ms", t.ms()}};
    out << record.dump(2) << "\n";
  } else {
    for (const kappa_row& r : rows)
      out << r.n << " " << r.q_digits << " " << format_kappa(r.kappa) << "\n";
  }
  return exit_ok;
}

}  // namespace detail

// Entry point behind main(): args in natural order, program name excluded.
// Returns the process exit code; all diagnostics go to err.
inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{
      "exact Engel-type series, their interlaced continued fractions, and "
      "approximation measurements"};
  app.require_subcommand(1);

  detail::options opt;

  const auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--pq", opt.seeds, "seed fraction P/Q (sign on P only)")
        ->required();
  };
  // CLI::PositiveNumber words its failures with double-typed bounds; keep
  // the message integral for integer flags.
  const CLI::Validator positive_int(
      [](std::string& s) -> std::string {
        const bool all_digits =
            !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
        if (!all_digits || s.find_first_not_of('0') == std::string::npos)
          return "expected a positive integer, got '" + s + "'";
        return {};
      },
      "positive integer", "POSITIVE");
  const auto add_rule = [&](CLI::App* cmd) {
    cmd->add_option("--z", opt.rules,
                    "z-rule over n and x, e.g. \"n\", \"x^2+1\"")
        ->required();
  };
  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", opt.json_output, "one structured record");
    cmd->add_option("--max-digits", opt.max_digits,
                    "per-term decimal digit budget");
  };
  const auto add_terms = [&](CLI::App* cmd) {
    cmd->add_option("--terms", opt.terms, "number of terms N")
        ->check(positive_int);
  };

  CLI::App* expand = app.add_subcommand(
      "expand", "canonical and even-normalized expansions of a fraction");
  add_seed(expand);
  expand->add_flag("--json", opt.json_output, "one structured record");

  CLI::App* generate =
      app.add_subcommand("generate", "generate the sequence x_1..x_N");
  add_seed(generate);
  add_rule(generate);
  add_terms(generate);
  add_common(generate);

  CLI::App* verify = app.add_subcommand(
      "verify", "verify expansion, recurrence, growth, and determinant "
                "identities; repeat --pq/--z for a batch");
  add_seed(verify);
  add_rule(verify);
  add_terms(verify);
  add_common(verify);
  verify->add_option("--jobs", opt.jobs,
                     "worker threads across independent cases")
      ->check(positive_int);

  CLI::App* digits = app.add_subcommand(
      "digits", "certified decimal digits of the full series value");
  add_seed(digits);
  add_rule(digits);
  digits->add_option("--digits", opt.digits, "fractional digits d")
      ->check(positive_int);
  add_common(digits);

  CLI::App* cfseries = app.add_subcommand(
      "cfseries", "interlaced continued-fraction coefficients of S_N");
  add_seed(cfseries);
  add_rule(cfseries);
  add_terms(cfseries);
  add_common(cfseries);

  CLI::App* kappa = app.add_subcommand(
      "kappa", "empirical irrationality exponents at depth N");
  add_seed(kappa);
  add_rule(kappa);
  add_terms(kappa);
  add_common(kappa);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return exit_parse;
  }

  try {
    if (*verify) {
      if (opt.rules.size() == 1 && opt.seeds.size() > 1)
        opt.rules.resize(opt.seeds.size(), opt.rules.front());
      if (opt.seeds.size() != opt.rules.size())
        throw parse_error(1, "need one --z per --pq (or a single --z)");
    } else if (opt.seeds.size() > 1 || opt.rules.size() > 1) {
      throw parse_error(1, "only verify accepts repeated --pq/--z");
    }

    if (*expand) return detail::cmd_expand(opt, out);
    if (*generate) return detail::cmd_generate(opt, out);
    if (*verify) return detail::cmd_verify(opt, out);
    if (*digits) return detail::cmd_digits(opt, out);
    if (*cfseries) return detail::cmd_cfseries(opt, out);
    if (*kappa) return detail::cmd_kappa(opt, out);
  } catch (const parse_error& e) {
    err << e.what() << "\n";
    return exit_parse;
  } catch (const non_positive_z& e) {
    err << e.what() << "\n";
    return exit_positivity;
  } catch (const digit_budget_exceeded& e) {
    err << e.what() << "\n";
    return exit_budget;
  } catch (const insufficient_terms& e) {
    err << e.what() << "\n";
    return exit_insufficient;
  } catch (const error& e) {
    err << e.what() << "\n";
    return exit_identity;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return exit_parse;
  }
  err << "no subcommand selected\n";
  return exit_parse;
}

}  // namespace engelcf::cli

#endif  // ENGELCF_CLI_HPP_
