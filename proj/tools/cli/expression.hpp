#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cuspval/errors.hpp"
#include "cuspval/exactnum.hpp"
#include "cuspval/laurent.hpp"

namespace cuspval::cli {

class ParseError : public InvalidArgument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InvalidArgument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Syntax tree for
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := base ('^' integer)?
///   base   := integer | 'x' | 'y' | '(' expr ')' | '-' factor
/// A rational literal p/q is the quotient of two integer literals.
struct Expr {
  enum class Kind { literal, x, y, negate, sum, difference, product, quotient, power, group };

  Kind kind = Kind::literal;
  std::size_t position = 0;
  Integer literal = 0;         // Kind::literal
  std::int64_t exponent = 0;   // Kind::power
  std::vector<Expr> operands;  // 1 for negate/power/group, 2 for binary nodes
};

/// Throws ParseError.
Expr parse_expression(std::string_view text);

/// Throws ParseError on division by zero or a negative power of zero.
RationalFunction lower(const Expr& e);

inline RationalFunction parse_rational_function(std::string_view text) { return lower(parse_expression(text)); }

}  // namespace cuspval::cli
