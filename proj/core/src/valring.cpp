#include "cuspval/valring.hpp"

#include <algorithm>
#include <numeric>

#include "cuspval/errors.hpp"

namespace cuspval {

namespace {

void require_coprime_pair(std::int64_t a, std::int64_t b, const char* who) {
  if (b < 1 || a <= b) throw InvalidArgument(std::string(who) + ": need a > b >= 1");
  if (std::gcd(a, b) != 1) {
    throw NotCoprime(std::string(who) + ": gcd(" + std::to_string(a) + ", " + std::to_string(b) + ") != 1");
  }
}

}  // namespace

BezoutPair bezout(std::int64_t a, std::int64_t b) {
  require_coprime_pair(a, b, "bezout");
  if (b == 1) return {1, a - 1};
  // Extended Euclid for a^{-1} mod b.
  std::int64_t r0 = a % b, r1 = b;
  std::int64_t s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1, r1 = r2;
    s0 = s1, s1 = s2;
  }
  std::int64_t p = ((s0 % b) + b) % b;
  if (p == 0) p = b;
  return {p, (p * a - 1) / b};
}

RingPresentation ring_generators(std::int64_t a, std::int64_t b) {
  auto [p, q] = bezout(a, b);
  return {LaurentMonomial{-b, a}, LaurentMonomial{p, -q}, p, q, a, b};
}

StructuralMembership membership_structural(const RationalFunction& r, const RingPresentation& pres) {
  if (r.is_zero()) throw ZeroPolynomial("membership_structural: zero has infinite value");
  // Clear monomial denominators so both sides are polynomials in x, y.
  LaurentMonomial shift = r.numerator().min_exponents();
  LaurentMonomial dmin = r.denominator().min_exponents();
  shift.ex = std::min<std::int64_t>({shift.ex, dmin.ex, 0});
  shift.ey = std::min<std::int64_t>({shift.ey, dmin.ey, 0});
  const LaurentMonomial lift = LaurentMonomial::unit() / shift;

  const ChartBasis basis = pres.basis();
  LaurentPolynomial num = rewrite_in_chart(r.numerator().times(lift), basis);
  LaurentPolynomial den = rewrite_in_chart(r.denominator().times(lift), basis);

  // In (u, v) coordinates the second exponent is the power of v.
  auto v_power = [](const LaurentPolynomial& p) { return p.min_exponents().ey; };
  const std::int64_t n = v_power(num);
  const std::int64_t m = v_power(den);

  StructuralMembership out;
  out.gap = n - m;
  out.member = n >= m;
  out.unit_numerator = num.times(LaurentMonomial{0, -n});
  out.unit_denominator = den.times(LaurentMonomial{0, -m});
  return out;
}

bool membership_by_value(const RationalFunction& r, const MonomialValuation& nu) {
  return nu.sign(nu.value_of(r)) >= 0;
}

UnionMembership membership_union(const LaurentMonomial& m, const MonomialValuation& nu, std::size_t max_steps) {
  UnionMembership out;
  PositivePath path = positive_path(nu, max_steps);
  for (std::size_t i = 0; i < path.vertices.size(); ++i) {
    ++out.vertices_searched;
    auto [alpha, beta] = lattice_solve(m, path.vertices[i].basis());
    if (alpha >= 0 && beta >= 0) {
      out.vertex_index = i;
      out.vertex = path.vertices[i];
      out.exponents = {alpha, beta};
      break;
    }
  }
  return out;
}

}  // namespace cuspval
