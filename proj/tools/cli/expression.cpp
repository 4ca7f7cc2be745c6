#include "expression.hpp"

#include <cctype>
#include <limits>

namespace cuspval::cli {

namespace {

constexpr std::int64_t kMaxExponent = 4096;

Expr node(Expr::Kind kind, std::size_t at) {
  Expr e;
  e.kind = kind;
  e.position = at;
  return e;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static Expr binary(Expr::Kind kind, std::size_t at, Expr lhs, Expr rhs) {
    Expr e = node(kind, at);
    e.operands.push_back(std::move(lhs));
    e.operands.push_back(std::move(rhs));
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    while (true) {
      skip_ws();
      std::size_t at = pos_;
      if (accept('+')) {
        lhs = binary(Expr::Kind::sum, at, std::move(lhs), term());
      } else if (accept('-')) {
        lhs = binary(Expr::Kind::difference, at, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = factor();
    while (true) {
      skip_ws();
      std::size_t at = pos_;
      if (accept('*')) {
        lhs = binary(Expr::Kind::product, at, std::move(lhs), factor());
      } else if (accept('/')) {
        lhs = binary(Expr::Kind::quotient, at, std::move(lhs), factor());
      } else {
        return lhs;
      }
    }
  }

  Expr factor() {
    Expr b = base();
    skip_ws();
    std::size_t at = pos_;
    if (!accept('^')) return b;
    Expr e = node(Expr::Kind::power, at);
    e.exponent = exponent();
    e.operands.push_back(std::move(b));
    return e;
  }

  std::int64_t exponent() {
    skip_ws();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
      skip_ws();
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected an integer exponent");
    }
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > kMaxExponent) fail("exponent too large");
      ++pos_;
    }
    return negative ? -v : v;
  }

  Expr base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const std::size_t at = pos_;
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Expr e = node(Expr::Kind::literal, at);
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e.literal = e.literal * 10 + (text_[pos_] - '0');
        ++pos_;
      }
      return e;
    }
    if (c == 'x' || c == 'y') {
      ++pos_;
      return node(c == 'x' ? Expr::Kind::x : Expr::Kind::y, at);
    }
    if (c == '(') {
      ++pos_;
      Expr e = node(Expr::Kind::group, at);
      e.operands.push_back(expr());
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (c == '-') {
      ++pos_;
      Expr e = node(Expr::Kind::negate, at);
      e.operands.push_back(factor());
      return e;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expression(std::string_view text) { return Parser(text).parse(); }

RationalFunction lower(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::literal:
      return LaurentPolynomial::constant(Rational(e.literal));
    case K::x:
      return LaurentPolynomial(LaurentMonomial::x());
    case K::y:
      return LaurentPolynomial(LaurentMonomial::y());
    case K::negate:
      return -lower(e.operands[0]);
    case K::group:
      return lower(e.operands[0]);
    case K::sum:
      return lower(e.operands[0]) + lower(e.operands[1]);
    case K::difference:
      return lower(e.operands[0]) - lower(e.operands[1]);
    case K::product:
      return lower(e.operands[0]) * lower(e.operands[1]);
    case K::quotient: {
      RationalFunction den = lower(e.operands[1]);
      if (den.is_zero()) throw ParseError("division by zero", e.position);
      return lower(e.operands[0]) / den;
    }
    case K::power: {
      RationalFunction b = lower(e.operands[0]);
      if (e.exponent < 0 && b.is_zero()) throw ParseError("negative power of zero", e.position);
      return b.pow(e.exponent);
    }
  }
  throw ParseError("unknown expression node", e.position);
}

}  // namespace cuspval::cli
