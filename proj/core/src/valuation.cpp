#include "cuspval/valuation.hpp"

#include <type_traits>

#include "cuspval/errors.hpp"

namespace cuspval {

namespace {

std::strong_ordering sign_to_ordering(int s) {
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering flip(std::strong_ordering o) {
  if (o == std::strong_ordering::less) return std::strong_ordering::greater;
  if (o == std::strong_ordering::greater) return std::strong_ordering::less;
  return o;
}

// Sign of dm * rho + dn.
std::strong_ordering stream_sign(const StreamRatio& g, std::int64_t dm, std::int64_t dn) {
  if (dm == 0) return sign_to_ordering(dn > 0 ? 1 : (dn < 0 ? -1 : 0));
  // dm * rho + dn = dm * (rho - (-dn / dm))
  std::strong_ordering o = stream_compare(g.rho, Rational(Integer(-dn), Integer(dm)), g.max_iters);
  return dm > 0 ? o : flip(o);
}

}  // namespace

Rational numeric_value(const RationalRatio& group, Value v) {
  return Rational(v.m) * group.nu_x + Rational(v.n) * group.nu_y;
}

Z2 numeric_value(const LexZ2& group, Value v) {
  return {v.m * group.vx.first + v.n * group.vy.first, v.m * group.vx.second + v.n * group.vy.second};
}

std::strong_ordering compare_values(const ValueGroup& group, Value v1, Value v2) {
  const Value d = v1 - v2;
  return std::visit(
      [&](const auto& g) -> std::strong_ordering {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, RationalRatio>) {
          return sign_to_ordering(numeric_value(g, d).sign());
        } else if constexpr (std::is_same_v<G, StreamRatio>) {
          return stream_sign(g, d.m, d.n);
        } else {
          return numeric_value(g, d) <=> Z2{};
        }
      },
      group);
}

MonomialValuation::MonomialValuation(ValueGroup group) : group_(std::move(group)) {
  std::visit(
      [&](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, RationalRatio>) {
          if (g.nu_x.sign() <= 0 || g.nu_y.sign() <= 0) {
            throw InvalidArgument("monomial valuation: nu(x) and nu(y) must be positive");
          }
          swapped_ = g.nu_x < g.nu_y;
        } else if constexpr (std::is_same_v<G, StreamRatio>) {
          Integer d0 = g.rho.digit(0);
          if (d0 < 0) throw InvalidArgument("monomial valuation: stream ratio must be positive");
          swapped_ = d0 == 0;
        } else {
          swapped_ = g.vx < g.vy;
        }
      },
      group_);
}

MonomialValuation MonomialValuation::rational(const Rational& nu_x, const Rational& nu_y) {
  return MonomialValuation(RationalRatio{nu_x, nu_y});
}

MonomialValuation MonomialValuation::stream(CFStream rho, std::size_t max_iters) {
  return MonomialValuation(StreamRatio{std::move(rho), max_iters});
}

MonomialValuation MonomialValuation::lex(Z2 vx, Z2 vy) { return MonomialValuation(LexZ2{vx, vy}); }

int MonomialValuation::sign(Value v) const {
  auto o = compare(v, Value{});
  return o < 0 ? -1 : (o > 0 ? 1 : 0);
}

Value MonomialValuation::value_of(const LaurentPolynomial& p) const {
  if (p.is_zero()) throw ZeroPolynomial("valuation of zero is infinity");
  auto it = p.terms().begin();
  Value best = value_of(it->first);
  for (++it; it != p.terms().end(); ++it) {
    Value v = value_of(it->first);
    if (compare(v, best) < 0) best = v;
  }
  return best;
}

Value MonomialValuation::value_of(const RationalFunction& r) const {
  if (r.is_zero()) throw ZeroPolynomial("valuation of zero is infinity");
  return value_of(r.numerator()) - value_of(r.denominator());
}

}  // namespace cuspval
