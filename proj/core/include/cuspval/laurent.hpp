#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "cuspval/exactnum.hpp"

namespace cuspval {

/// x^ex * y^ey. In chart coordinates (f, g) the same type reads f^ex * g^ey.
struct LaurentMonomial {
  std::int64_t ex = 0;
  std::int64_t ey = 0;

  static constexpr LaurentMonomial unit() { return {0, 0}; }
  static constexpr LaurentMonomial x() { return {1, 0}; }
  static constexpr LaurentMonomial y() { return {0, 1}; }

  constexpr bool is_unit() const { return ex == 0 && ey == 0; }

  LaurentMonomial& operator*=(const LaurentMonomial& o);
  LaurentMonomial& operator/=(const LaurentMonomial& o);
  friend LaurentMonomial operator*(LaurentMonomial a, const LaurentMonomial& b) { return a *= b; }
  friend LaurentMonomial operator/(LaurentMonomial a, const LaurentMonomial& b) { return a /= b; }
  LaurentMonomial pow(std::int64_t k) const;

  // Lexicographic on (ex, ey); this is the term order of LaurentPolynomial.
  friend constexpr auto operator<=>(const LaurentMonomial&, const LaurentMonomial&) = default;
};

enum class MonoOp { multiply, divide };

LaurentMonomial mono_combine(const LaurentMonomial& m1, const LaurentMonomial& m2, MonoOp op);

/// Reduced fraction form with exponent 1 suppressed: "x^5/y^17", "y/x", "x*y^2",
/// "1/(x*y)", "1".
std::string to_string(const LaurentMonomial& m, std::string_view xname = "x", std::string_view yname = "y");

/// Finite sum of rational multiples of Laurent monomials. Zero coefficients are
/// never stored.
class LaurentPolynomial {
 public:
  using TermMap = std::map<LaurentMonomial, Rational>;

  LaurentPolynomial() = default;
  LaurentPolynomial(const LaurentMonomial& m, Rational coeff = 1);  // NOLINT(google-explicit-constructor)
  static LaurentPolynomial constant(const Rational& c) { return LaurentPolynomial(LaurentMonomial::unit(), c); }
  /// x^b - y^a
  static LaurentPolynomial cusp(std::int64_t a, std::int64_t b);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const LaurentMonomial& m) const;

  /// Componentwise minimum exponent over the terms. Throws ZeroPolynomial.
  LaurentMonomial min_exponents() const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const Rational& c);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const LaurentPolynomial& b) { return a *= b; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& c) { return a *= c; }

  LaurentPolynomial times(const LaurentMonomial& m) const;
  LaurentPolynomial pow(std::uint32_t k) const;

  /// Partial derivative in the first (var = 0) or second (var = 1) variable.
  LaurentPolynomial partial(int var) const;
  /// Throws InvalidArgument when a negative power meets a zero coordinate.
  Rational evaluate(const Rational& x, const Rational& y) const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  void add_term(const LaurentMonomial& m, const Rational& c);

  TermMap terms_;
};

/// "x^2 - y^3", "-3/2*x/y + 1". Parses back with the cli expression grammar.
std::string to_string(const LaurentPolynomial& p, std::string_view xname = "x", std::string_view yname = "y");

class RationalFunction {
 public:
  RationalFunction() : den_(LaurentPolynomial::constant(1)) {}
  RationalFunction(LaurentPolynomial num);  // NOLINT(google-explicit-constructor)
  /// Throws ZeroPolynomial if den is zero.
  RationalFunction(LaurentPolynomial num, LaurentPolynomial den);

  const LaurentPolynomial& numerator() const { return num_; }
  const LaurentPolynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const { return {-num_, den_}; }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  /// Throws ZeroPolynomial when b is zero.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction pow(std::int64_t k) const;

  /// Equality as elements of k(x, y): cross-multiplication.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

 private:
  LaurentPolynomial num_;
  LaurentPolynomial den_;
};

std::string to_string(const RationalFunction& r);

/// A pair of Laurent monomials forming a lattice basis: the exponent matrix
/// with columns f, g has determinant +-1.
class ChartBasis {
 public:
  /// Throws NonUnimodular.
  ChartBasis(LaurentMonomial f, LaurentMonomial g);
  static ChartBasis identity() { return {LaurentMonomial::x(), LaurentMonomial::y()}; }

  const LaurentMonomial& f() const { return f_; }
  const LaurentMonomial& g() const { return g_; }
  int determinant() const { return det_; }

  friend bool operator==(const ChartBasis& a, const ChartBasis& b) { return a.f_ == b.f_ && a.g_ == b.g_; }

 private:
  LaurentMonomial f_;
  LaurentMonomial g_;
  int det_;
};

/// f.ex * g.ey - g.ex * f.ey
std::int64_t exponent_determinant(const LaurentMonomial& f, const LaurentMonomial& g);

/// The unique (alpha, beta) with target = f^alpha * g^beta.
std::pair<std::int64_t, std::int64_t> lattice_solve(const LaurentMonomial& target, const ChartBasis& basis);

/// Rewrites p (in x, y) in the chart coordinates of basis.
LaurentPolynomial rewrite_in_chart(const LaurentPolynomial& p, const ChartBasis& basis);
/// Inverse of rewrite_in_chart: substitutes f and g back.
LaurentPolynomial expand_from_chart(const LaurentPolynomial& chart_poly, const ChartBasis& basis);

struct MonomialContent {
  LaurentMonomial content;
  LaurentPolynomial primitive;
};

/// p = content * primitive with primitive's minimal exponents both zero.
/// Throws ZeroPolynomial.
MonomialContent factor_monomial_content(const LaurentPolynomial& p);

}  // namespace cuspval
