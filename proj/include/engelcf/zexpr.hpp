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

#ifndef ENGELCF_ZEXPR_HPP_
#define ENGELCF_ZEXPR_HPP_

#include <cctype>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "engelcf/bigint.hpp"
#include "engelcf/errors.hpp"

namespace engelcf {

class z_expr;
z_expr parse_zspec(const std::string& text);

namespace detail {

struct z_node;
using z_node_ptr = std::shared_ptr<const z_node>;

struct z_node {
  enum class kind { literal, var_n, var_x, add, mul, pow };
  kind k;
  integer value;     // literal payload, or the exponent of a pow node
  z_node_ptr lhs;
  z_node_ptr rhs;    // unused for pow (exponent is a literal by grammar)
};

inline z_node_ptr make_literal(integer v) {
  return std::make_shared<z_node>(
      z_node{z_node::kind::literal, std::move(v), nullptr, nullptr});
}
inline z_node_ptr make_var(z_node::kind k) {
  return std::make_shared<z_node>(z_node{k, integer(0), nullptr, nullptr});
}
inline z_node_ptr make_binary(z_node::kind k, z_node_ptr l, z_node_ptr r) {
  return std::make_shared<z_node>(
      z_node{k, integer(0), std::move(l), std::move(r)});
}
inline z_node_ptr make_pow(z_node_ptr base, integer exp) {
  return std::make_shared<z_node>(
      z_node{z_node::kind::pow, std::move(exp), std::move(base), nullptr});
}

inline integer eval_node(const z_node& node, const integer& n,
                         const integer& x) {
  switch (node.k) {
    case z_node::kind::literal:
      return node.value;
    case z_node::kind::var_n:
      return n;
    case z_node::kind::var_x:
      return x;
    case z_node::kind::add:
      return eval_node(*node.lhs, n, x) + eval_node(*node.rhs, n, x);
    case z_node::kind::mul:
      return eval_node(*node.lhs, n, x) * eval_node(*node.rhs, n, x);
    case z_node::kind::pow:
      return ipow(eval_node(*node.lhs, n, x), node.value);
  }
  return integer(0);  // unreachable
}

inline bool node_equal(const z_node& a, const z_node& b) {
  if (a.k != b.k) return false;
  switch (a.k) {
    case z_node::kind::literal:
      return a.value == b.value;
    case z_node::kind::var_n:
    case z_node::kind::var_x:
      return true;
    case z_node::kind::add:
    case z_node::kind::mul:
      return node_equal(*a.lhs, *b.lhs) && node_equal(*a.rhs, *b.rhs);
    case z_node::kind::pow:
      return a.value == b.value && node_equal(*a.lhs, *b.lhs);
  }
  return false;  // unreachable
}

// Printing precedence: add < mul < pow < atom.
inline void print_node(const z_node& node, std::string& out, int parent_prec) {
  const auto wrap = [&](int prec, auto&& body) {
    const bool parens = prec < parent_prec;
    if (parens) out += '(';
    body(prec);
    if (parens) out += ')';
  };
  switch (node.k) {
    case z_node::kind::literal:
      out += node.value.str();
      break;
    case z_node::kind::var_n:
      out += 'n';
      break;
    case z_node::kind::var_x:
      out += 'x';
      break;
    case z_node::kind::add:
      wrap(1, [&](int prec) {
        print_node(*node.lhs, out, prec);
        out += '+';
        print_node(*node.rhs, out, prec);
      });
      break;
    case z_node::kind::mul:
      wrap(2, [&](int prec) {
        print_node(*node.lhs, out, prec);
        out += '*';
        print_node(*node.rhs, out, prec + 1);
      });
      break;
    case z_node::kind::pow:
      wrap(3, [&](int prec) {
        print_node(*node.lhs, out, prec + 1);
        out += '^';
        out += node.value.str();
      });
      break;
  }
}

}  // namespace detail

// Parsed z-rule: an arithmetic expression in the step index n and the
// current term x, built from nonnegative integer literals with +, *, ^
// (integer-literal exponents only) and parentheses.
class z_expr {
 public:
  // Evaluates at step n with current term x.  Total; positivity is the
  // caller's concern (see eval_z).
  integer eval(const integer& n, const integer& x) const {
    return detail::eval_node(*root_, n, x);
  }

  // Canonical text form; reparsing it yields a structurally equal z_expr.
  std::string str() const {
    std::string out;
    detail::print_node(*root_, out, 0);
    return out;
  }

  friend bool operator==(const z_expr& a, const z_expr& b) {
    return detail::node_equal(*a.root_, *b.root_);
  }
  friend bool operator!=(const z_expr& a, const z_expr& b) { return !(a == b); }

  friend z_expr parse_zspec(const std::string& text);

 private:
  explicit z_expr(detail::z_node_ptr root) : root_(std::move(root)) {}
  detail::z_node_ptr root_;
};

namespace detail {

// Hand-rolled scanner/parser for the z-rule grammar:
//   expr   := term ('+' term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' INT)*
//   atom   := INT | 'n' | 'x' | '(' expr ')'
// Positions reported in parse_error are 1-based character offsets.
class z_parser {
 public:
  explicit z_parser(const std::string& text) : text_(text) {}

  z_node_ptr parse() {
    z_node_ptr e = parse_expr();
    skip_space();
    if (pos_ != text_.size())
      throw parse_error(pos_ + 1, trailing_message());
    return e;
  }

 private:
  z_node_ptr parse_expr() {
    z_node_ptr lhs = parse_term();
    while (peek() == '+') {
      ++pos_;
      lhs = make_binary(z_node::kind::add, std::move(lhs), parse_term());
    }
    return lhs;
  }

  z_node_ptr parse_term() {
    z_node_ptr lhs = parse_factor();
    while (peek() == '*') {
      ++pos_;
      lhs = make_binary(z_node::kind::mul, std::move(lhs), parse_factor());
    }
    return lhs;
  }

  z_node_ptr parse_factor() {
    z_node_ptr base = parse_atom();
    while (peek() == '^') {
      ++pos_;
      skip_space();
      if (pos_ == text_.size() || !std::isdigit(byte_at(pos_)))
        throw parse_error(pos_ + 1,
                          "exponent must be a nonnegative integer literal");
      base = make_pow(std::move(base), scan_integer());
    }
    return base;
  }

  z_node_ptr parse_atom() {
    const char c = peek();
    if (c == '\0')
      throw parse_error(pos_ + 1, "unexpected end of input");
    if (std::isdigit(byte_at(pos_))) return make_literal(scan_integer());
    if (std::isalpha(byte_at(pos_))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(byte_at(pos_))) ++pos_;
      const std::string name = text_.substr(start, pos_ - start);
      if (name == "n") return make_var(z_node::kind::var_n);
      if (name == "x") return make_var(z_node::kind::var_x);
      throw parse_error(start + 1, "unknown variable '" + name + "'");
    }
    if (c == '(') {
      ++pos_;
      z_node_ptr inner = parse_expr();
      if (peek() != ')')
        throw parse_error(pos_ + 1, "expected ')'");
      ++pos_;
      return inner;
    }
    throw parse_error(pos_ + 1, std::string("unexpected character '") + c + "'");
  }

  integer scan_integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(byte_at(pos_))) ++pos_;
    return integer(text_.substr(start, pos_ - start));
  }

  // Next significant character, or '\0' at end; leaves pos_ on it.
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(byte_at(pos_))) ++pos_;
  }

  unsigned char byte_at(std::size_t i) const {
    return static_cast<unsigned char>(text_[i]);
  }

  std::string trailing_message() const {
    return std::string("unexpected character '") + text_[pos_] + "'";
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline z_expr parse_zspec(const std::string& text) {
  return z_expr(detail::z_parser(text).parse());
}

// Evaluates rule at step n (with current term x) and enforces z_n >= 1.
inline integer eval_z(const z_expr& rule, std::size_t n, const integer& x) {
  integer z = rule.eval(integer(static_cast<unsigned long>(n)), x);
  if (z <= 0) throw non_positive_z(n);
  return z;
}

}  // namespace engelcf

#endif  // ENGELCF_ZEXPR_HPP_
