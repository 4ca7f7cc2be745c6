#include "cuspval/exactnum.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "cuspval/errors.hpp"

namespace cuspval {

Integer floor_div(const Integer& n, const Integer& d) {
  if (d.is_zero()) throw InvalidArgument("floor_div: division by zero");
  Integer q = n / d;  // truncates toward zero
  Integer r = n - q * d;
  if (!r.is_zero() && ((r.sign() < 0) != (d.sign() < 0))) q -= 1;
  return q;
}

// ---- Rational ----

Rational::Rational(const Integer& n) : num_(n) {}

Rational::Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw InvalidArgument("Rational: zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  Integer g = boost::multiprecision::gcd(num_, den_);
  if (g < 0) g = -g;
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_.is_zero()) throw InvalidArgument("Rational: division by zero");
  Integer n = num_ * o.den_;
  Integer d = den_ * o.num_;
  num_ = std::move(n);
  den_ = std::move(d);
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Integer lhs = a.num_ * b.den_;
  Integer rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

namespace {

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw InvalidArgument("expected an integer: '" + std::string(text) + "'");
  Integer v = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') throw InvalidArgument("expected an integer: '" + std::string(text) + "'");
    v = v * 10 + (c - '0');
  }
  return neg ? Integer(-v) : v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

// ---- CFExpansion ----

CFExpansion::CFExpansion(std::vector<Integer> digits) : digits_(std::move(digits)) {
  if (digits_.empty()) throw InvalidArgument("CFExpansion: no digits");
  for (std::size_t i = 1; i < digits_.size(); ++i) {
    if (digits_[i] < 1) throw InvalidArgument("CFExpansion: digit " + std::to_string(i) + " must be >= 1");
  }
}

bool CFExpansion::is_canonical() const { return digits_.size() == 1 || digits_.back() >= 2; }

CFExpansion CFExpansion::alternate() const {
  std::vector<Integer> d = digits_;
  if (d.size() > 1 && d.back() == 1) {
    d.pop_back();
    d.back() += 1;
  } else {
    d.back() -= 1;
    d.push_back(1);
  }
  return CFExpansion(std::move(d));
}

Integer CFExpansion::digit_sum() const {
  Integer s = 0;
  for (const auto& d : digits_) s += d;
  return s;
}

std::string CFExpansion::to_string() const {
  std::ostringstream os;
  os << '[' << digits_[0];
  for (std::size_t i = 1; i < digits_.size(); ++i) os << (i == 1 ? "; " : ", ") << digits_[i];
  os << ']';
  return os.str();
}

// ---- CFStream ----

CFStream::CFStream(DigitSource source, std::optional<Periodic> periodic)
    : source_(std::move(source)), periodic_(std::move(periodic)) {
  if (!source_) throw InvalidArgument("CFStream: empty digit source");
  if (periodic_) {
    if (periodic_->period.empty()) throw InvalidArgument("CFStream: empty period");
    if (periodic_->preperiod.empty()) throw InvalidArgument("CFStream: preperiod must contain d0");
  }
}

namespace {

Integer periodic_digit(const CFStream::Periodic& p, std::size_t i) {
  if (i < p.preperiod.size()) return p.preperiod[i];
  return p.period[(i - p.preperiod.size()) % p.period.size()];
}

}  // namespace

CFStream CFStream::periodic(std::vector<Integer> preperiod, std::vector<Integer> period) {
  Periodic meta{std::move(preperiod), std::move(period)};
  if (meta.period.empty()) throw InvalidArgument("CFStream: empty period");
  if (meta.preperiod.empty()) throw InvalidArgument("CFStream: preperiod must contain d0");
  for (std::size_t i = 1; i < meta.preperiod.size(); ++i) {
    if (meta.preperiod[i] < 1) throw InvalidArgument("CFStream: digits after d0 must be >= 1");
  }
  for (const auto& d : meta.period) {
    if (d < 1) throw InvalidArgument("CFStream: digits after d0 must be >= 1");
  }
  auto source = [meta](std::size_t i) { return periodic_digit(meta, i); };
  return CFStream(std::move(source), std::move(meta));
}

CFStream CFStream::sqrt2() { return periodic({1}, {2}); }

Integer CFStream::digit(std::size_t i) const {
  Integer d = source_(i);
  if (i >= 1 && d < 1) {
    throw InvalidArgument("CFStream: digit " + std::to_string(i) + " = " + d.str() + " is not positive");
  }
  if (periodic_ && periodic_digit(*periodic_, i) != d) {
    throw InvalidArgument("CFStream: digit " + std::to_string(i) + " contradicts periodic metadata");
  }
  return d;
}

std::string CFStream::to_string(std::size_t shown) const {
  std::ostringstream os;
  if (periodic_) {
    const auto& pre = periodic_->preperiod;
    os << '[' << pre[0];
    for (std::size_t i = 1; i < pre.size(); ++i) os << (i == 1 ? "; " : ", ") << pre[i];
    os << (pre.size() == 1 ? "; (" : ", (");
    for (std::size_t i = 0; i < periodic_->period.size(); ++i) os << (i ? ", " : "") << periodic_->period[i];
    os << ")]";
    return os.str();
  }
  os << '[' << digit(0);
  for (std::size_t i = 1; i < std::max<std::size_t>(shown, 1); ++i) os << (i == 1 ? "; " : ", ") << digit(i);
  os << ", ...]";
  return os.str();
}

// ---- operations ----

CFExpansion cf_expand(const Rational& r) {
  // Euclid on (num, den) with floor quotients; the last quotient of a
  // non-integer is always >= 2, so the result is canonical.
  std::vector<Integer> digits;
  Integer n = r.numerator();
  Integer d = r.denominator();
  while (true) {
    Integer q = floor_div(n, d);
    digits.push_back(q);
    Integer rem = n - q * d;
    if (rem.is_zero()) break;
    n = std::move(d);
    d = std::move(rem);
  }
  return CFExpansion(std::move(digits));
}

Rational cf_value(const CFExpansion& cf) {
  const auto& d = cf.digits();
  Rational v(d.back());
  for (std::size_t i = d.size() - 1; i-- > 0;) v = Rational(d[i]) + Rational(1) / v;
  return v;
}

CFExpansion cf_canonicalize(const CFExpansion& cf) {
  if (cf.is_canonical()) return cf;
  return cf.alternate();
}

namespace {

// Convergents h_k / k_k via the standard three-term recurrence.
template <typename DigitAt>
std::vector<Rational> convergents(DigitAt&& digit_at, std::size_t count) {
  std::vector<Rational> out;
  out.reserve(count);
  Integer h_prev = 1, h_prev2 = 0;
  Integer k_prev = 0, k_prev2 = 1;
  for (std::size_t i = 0; i < count; ++i) {
    Integer d = digit_at(i);
    Integer h = d * h_prev + h_prev2;
    Integer k = d * k_prev + k_prev2;
    out.emplace_back(h, k);
    h_prev2 = std::move(h_prev);
    h_prev = std::move(h);
    k_prev2 = std::move(k_prev);
    k_prev = std::move(k);
  }
  return out;
}

}  // namespace

std::vector<Rational> cf_convergents(const CFExpansion& cf, std::size_t count) {
  if (count > cf.size()) {
    throw OutOfDigits("cf_convergents: requested " + std::to_string(count) + " convergents from " +
                      std::to_string(cf.size()) + " digits");
  }
  return convergents([&](std::size_t i) { return cf[i]; }, count);
}

std::vector<Rational> cf_convergents(const CFStream& cf, std::size_t count) {
  return convergents([&](std::size_t i) { return cf.digit(i); }, count);
}

std::strong_ordering stream_compare(const CFStream& rho, const Rational& t, std::size_t max_iters) {
  // An irrational rho lies strictly between consecutive convergents c_k and c_{k+1}.
  Integer h_prev = 1, h_prev2 = 0;
  Integer k_prev = 0, k_prev2 = 1;
  std::optional<Rational> last;
  for (std::size_t i = 0; i <= max_iters; ++i) {
    Integer d = rho.digit(i);
    Integer h = d * h_prev + h_prev2;
    Integer k = d * k_prev + k_prev2;
    Rational c(h, k);
    if (last) {
      const Rational& lo = std::min(*last, c);
      const Rational& hi = std::max(*last, c);
      if (t <= lo) return std::strong_ordering::greater;
      if (t >= hi) return std::strong_ordering::less;
    }
    last = std::move(c);
    h_prev2 = std::move(h_prev);
    h_prev = std::move(h);
    k_prev2 = std::move(k_prev);
    k_prev = std::move(k);
  }
  throw IndecisiveComparison("stream_compare: " + rho.to_string() + " vs " + t.to_string() +
                             " undecided after " + std::to_string(max_iters) + " refinements");
}

}  // namespace cuspval
