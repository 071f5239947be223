#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "hilbert10/expr.hpp"
#include "hilbert10/poly.hpp"

namespace h10 {

// Syntax error carrying a 1-based source position; what() is prefixed
// with "line:column:".
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                             message),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

/*
 * Polynomial interchange grammar:
 *
 *   poly   := term (('+'|'-') term)*
 *   term   := factor ('*' factor)*
 *   factor := ['-'] base ('^' nat)?
 *   base   := int | var | '(' poly ')'
 *   var    := 'a' | ('z'|'x') nat
 *
 * `a` is variable index 0, `z<k>` and `x<k>` are index k; whitespace is
 * insignificant.  Unary minus binds to a single factor, and `2^3^2` is
 * rejected: exponent chains need parentheses.
 */
Expr parse_poly(std::string_view text);

// Canonical form: graded-lex descending terms, explicit `*` and `^`,
// `a` for index 0 and `z<k>` otherwise, e.g. "3*z1^2*z2 - a + 7".
// parse_poly(print_poly(P)) expands back to P.
std::string print_poly(const SparsePoly& p);

}  // namespace h10
