#include "cuspval/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cuspval/errors.hpp"

namespace cuspval {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw InvalidArgument("exponent overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw InvalidArgument("exponent overflow");
  return r;
}

__extension__ using Wide = __int128;

// Exact 2x2 determinant a*d - b*c, narrowed to 64 bits.
std::int64_t checked_det(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  const Wide r = static_cast<Wide>(a) * d - static_cast<Wide>(b) * c;
  if (r > INT64_MAX || r < INT64_MIN) throw InvalidArgument("exponent overflow");
  return static_cast<std::int64_t>(r);
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw InvalidArgument("exponent overflow");
  return r;
}

}  // namespace

// ---- LaurentMonomial ----

LaurentMonomial& LaurentMonomial::operator*=(const LaurentMonomial& o) {
  ex = checked_add(ex, o.ex);
  ey = checked_add(ey, o.ey);
  return *this;
}

LaurentMonomial& LaurentMonomial::operator/=(const LaurentMonomial& o) {
  ex = checked_sub(ex, o.ex);
  ey = checked_sub(ey, o.ey);
  return *this;
}

LaurentMonomial LaurentMonomial::pow(std::int64_t k) const { return {checked_mul(ex, k), checked_mul(ey, k)}; }

LaurentMonomial mono_combine(const LaurentMonomial& m1, const LaurentMonomial& m2, MonoOp op) {
  return op == MonoOp::multiply ? m1 * m2 : m1 / m2;
}

namespace {

void append_power(std::string& out, std::string_view name, std::int64_t e) {
  if (!out.empty()) out += '*';
  out += name;
  if (e != 1) out += "^" + std::to_string(e);
}

}  // namespace

std::string to_string(const LaurentMonomial& m, std::string_view xname, std::string_view yname) {
  std::string num, den;
  int den_factors = 0;
  if (m.ex > 0) append_power(num, xname, m.ex);
  if (m.ey > 0) append_power(num, yname, m.ey);
  if (m.ex < 0) append_power(den, xname, -m.ex), ++den_factors;
  if (m.ey < 0) append_power(den, yname, -m.ey), ++den_factors;
  if (num.empty()) num = "1";
  if (den.empty()) return num;
  return num + "/" + (den_factors > 1 ? "(" + den + ")" : den);
}

// ---- LaurentPolynomial ----

LaurentPolynomial::LaurentPolynomial(const LaurentMonomial& m, Rational coeff) {
  if (!coeff.is_zero()) terms_.emplace(m, std::move(coeff));
}

LaurentPolynomial LaurentPolynomial::cusp(std::int64_t a, std::int64_t b) {
  return LaurentPolynomial(LaurentMonomial{b, 0}) - LaurentPolynomial(LaurentMonomial{0, a});
}

Rational LaurentPolynomial::coefficient(const LaurentMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational() : it->second;
}

LaurentMonomial LaurentPolynomial::min_exponents() const {
  if (terms_.empty()) throw ZeroPolynomial("min_exponents of the zero polynomial");
  LaurentMonomial lo = terms_.begin()->first;
  for (const auto& [m, c] : terms_) {
    lo.ex = std::min(lo.ex, m.ex);
    lo.ey = std::min(lo.ey, m.ey);
  }
  return lo;
}

void LaurentPolynomial::add_term(const LaurentMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
  LaurentPolynomial r;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  }
  terms_ = std::move(r.terms_);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

LaurentPolynomial LaurentPolynomial::times(const LaurentMonomial& m) const {
  LaurentPolynomial r;
  for (const auto& [mono, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), mono * m, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::pow(std::uint32_t k) const {
  LaurentPolynomial result = constant(1);
  LaurentPolynomial base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::partial(int var) const {
  LaurentPolynomial r;
  for (const auto& [m, c] : terms_) {
    std::int64_t e = var == 0 ? m.ex : m.ey;
    if (e == 0) continue;
    LaurentMonomial d = var == 0 ? LaurentMonomial{m.ex - 1, m.ey} : LaurentMonomial{m.ex, m.ey - 1};
    r.add_term(d, c * Rational(e));
  }
  return r;
}

namespace {

Rational rational_pow(const Rational& base, std::int64_t e) {
  if (e < 0) {
    if (base.is_zero()) throw InvalidArgument("evaluate: negative power of zero");
    return Rational(1) / rational_pow(base, -e);
  }
  Rational r = 1;
  for (std::int64_t i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

Rational LaurentPolynomial::evaluate(const Rational& x, const Rational& y) const {
  Rational sum;
  for (const auto& [m, c] : terms_) sum += c * rational_pow(x, m.ex) * rational_pow(y, m.ey);
  return sum;
}

std::string to_string(const LaurentPolynomial& p, std::string_view xname, std::string_view yname) {
  if (p.is_zero()) return "0";
  std::string out;
  // Descending term order reads naturally ("x^2 - y^3", "x - 1").
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    bool negative = c.sign() < 0;
    Rational mag = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_unit()) {
      out += mag.to_string();
    } else if (mag == 1) {
      out += to_string(m, xname, yname);
    } else {
      out += mag.to_string() + "*" + to_string(m, xname, yname);
    }
  }
  return out;
}

// ---- RationalFunction ----

RationalFunction::RationalFunction(LaurentPolynomial num)
    : num_(std::move(num)), den_(LaurentPolynomial::constant(1)) {}

RationalFunction::RationalFunction(LaurentPolynomial num, LaurentPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroPolynomial("RationalFunction: zero denominator");
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.num_.is_zero()) throw ZeroPolynomial("RationalFunction: division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalFunction RationalFunction::pow(std::int64_t k) const {
  if (k >= 0) return {num_.pow(static_cast<std::uint32_t>(k)), den_.pow(static_cast<std::uint32_t>(k))};
  if (num_.is_zero()) throw ZeroPolynomial("RationalFunction: negative power of zero");
  return {den_.pow(static_cast<std::uint32_t>(-k)), num_.pow(static_cast<std::uint32_t>(-k))};
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string to_string(const RationalFunction& r) {
  if (r.denominator() == LaurentPolynomial::constant(1)) return to_string(r.numerator());
  return "(" + to_string(r.numerator()) + ")/(" + to_string(r.denominator()) + ")";
}

// ---- ChartBasis and lattice coordinates ----

std::int64_t exponent_determinant(const LaurentMonomial& f, const LaurentMonomial& g) {
  return checked_det(f.ex, g.ex, f.ey, g.ey);
}

ChartBasis::ChartBasis(LaurentMonomial f, LaurentMonomial g) : f_(f), g_(g) {
  std::int64_t det = exponent_determinant(f, g);
  if (det != 1 && det != -1) {
    throw NonUnimodular("basis (" + to_string(f) + ", " + to_string(g) + ") has determinant " +
                        std::to_string(det));
  }
  det_ = static_cast<int>(det);
}

std::pair<std::int64_t, std::int64_t> lattice_solve(const LaurentMonomial& target, const ChartBasis& basis) {
  // Cramer's rule; 1/det == det for det = +-1.
  const auto& f = basis.f();
  const auto& g = basis.g();
  const std::int64_t det = basis.determinant();
  const std::int64_t alpha = checked_mul(det, checked_det(g.ey, g.ex, target.ey, target.ex));
  const std::int64_t beta = checked_mul(det, checked_det(f.ex, f.ey, target.ex, target.ey));
  return {alpha, beta};
}

LaurentPolynomial rewrite_in_chart(const LaurentPolynomial& p, const ChartBasis& basis) {
  LaurentPolynomial r;
  for (const auto& [m, c] : p.terms()) {
    auto [alpha, beta] = lattice_solve(m, basis);
    r += LaurentPolynomial(LaurentMonomial{alpha, beta}, c);
  }
  return r;
}

LaurentPolynomial expand_from_chart(const LaurentPolynomial& chart_poly, const ChartBasis& basis) {
  LaurentPolynomial r;
  for (const auto& [m, c] : chart_poly.terms()) {
    r += LaurentPolynomial(basis.f().pow(m.ex) * basis.g().pow(m.ey), c);
  }
  return r;
}

MonomialContent factor_monomial_content(const LaurentPolynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("factor_monomial_content of the zero polynomial");
  LaurentMonomial content = p.min_exponents();
  return {content, p.times(LaurentMonomial::unit() / content)};
}

}  // namespace cuspval
