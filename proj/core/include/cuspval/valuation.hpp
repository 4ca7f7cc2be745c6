#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <variant>

#include "cuspval/exactnum.hpp"
#include "cuspval/laurent.hpp"

namespace cuspval {

/// m * nu(x) + n * nu(y). Ordered only relative to a ValueGroup.
struct Value {
  std::int64_t m = 0;
  std::int64_t n = 0;

  friend Value operator+(Value a, Value b) { return {a.m + b.m, a.n + b.n}; }
  friend Value operator-(Value a, Value b) { return {a.m - b.m, a.n - b.n}; }
  Value operator-() const { return {-m, -n}; }
  friend bool operator==(Value, Value) = default;
};

/// nu(x) = nu_x, nu(y) = nu_y, both positive rationals.
struct RationalRatio {
  Rational nu_x;
  Rational nu_y;
};

/// nu(x) = rho, nu(y) = 1 for a continued-fraction stream rho.
struct StreamRatio {
  CFStream rho;
  std::size_t max_iters = 256;
};

/// An element of Z^2 under lexicographic order.
struct Z2 {
  std::int64_t first = 0;
  std::int64_t second = 0;
  friend constexpr auto operator<=>(const Z2&, const Z2&) = default;
};

/// nu(x) = vx, nu(y) = vy in lexicographically ordered Z^2.
struct LexZ2 {
  Z2 vx;
  Z2 vy;
};

using ValueGroup = std::variant<RationalRatio, StreamRatio, LexZ2>;

/// Exact comparison of two values. Throws IndecisiveComparison for streams.
std::strong_ordering compare_values(const ValueGroup& group, Value v1, Value v2);

Rational numeric_value(const RationalRatio& group, Value v);
Z2 numeric_value(const LexZ2& group, Value v);

/// A monomial valuation on k(x, y): a polynomial takes the minimum of its term
/// values. The zero element has value infinity, which is never materialized as
/// a Value; asking for it throws ZeroPolynomial.
class MonomialValuation {
 public:
  /// nu_x, nu_y > 0.
  static MonomialValuation rational(const Rational& nu_x, const Rational& nu_y);
  /// rho must have d0 >= 0 so that it is positive.
  static MonomialValuation stream(CFStream rho, std::size_t max_iters = 256);
  static MonomialValuation lex(Z2 vx, Z2 vy);

  explicit MonomialValuation(ValueGroup group);

  const ValueGroup& group() const { return group_; }
  /// nu(x) < nu(y): the usual convention nu(x) > nu(y) holds after swapping x and y.
  bool variables_swapped() const { return swapped_; }

  std::strong_ordering compare(Value v1, Value v2) const { return compare_values(group_, v1, v2); }
  /// -1, 0 or 1.
  int sign(Value v) const;

  Value value_of(const LaurentMonomial& m) const { return {m.ex, m.ey}; }
  Value value_of(const LaurentPolynomial& p) const;
  Value value_of(const RationalFunction& r) const;

 private:
  ValueGroup group_;
  bool swapped_ = false;
};

inline Value value_of_monomial(const MonomialValuation& nu, const LaurentMonomial& m) { return nu.value_of(m); }
inline Value value_of_polynomial(const MonomialValuation& nu, const LaurentPolynomial& p) { return nu.value_of(p); }
inline Value value_of_rational_function(const MonomialValuation& nu, const RationalFunction& r) {
  return nu.value_of(r);
}

}  // namespace cuspval
