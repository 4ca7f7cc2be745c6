#pragma once

/**
 * @file exactnum.hpp
 * @brief Exact rationals and continued fractions.
 *
 * Rational is always stored in lowest terms with a positive denominator, so
 * equality is structural. CFExpansion is a finite digit sequence
 * [d0; d1, ..., dk]; CFStream produces digits of a (presumably irrational)
 * real on demand.
 *
 * A non-integer rational has two expansions, [..., dk] and [..., dk - 1, 1].
 * cf_expand always returns the canonical one (last digit >= 2 unless there is
 * a single digit); the other is available through CFExpansion::alternate().
 */

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cuspval {

using Integer = boost::multiprecision::cpp_int;

/// Floor division for arbitrary signs; d != 0.
Integer floor_div(const Integer& n, const Integer& d);

class Rational {
 public:
  Rational() = default;
  Rational(const Integer& n);  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  Rational(T n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  /// Throws InvalidArgument on a zero denominator.
  Rational(Integer n, Integer d);

  const Integer& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }

  int sign() const { return num_.sign(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == 1; }
  Integer floor() const { return floor_div(num_, den_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws InvalidArgument when dividing by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;
  /// Accepts "p", "-p", "p/q". Throws InvalidArgument on malformed input.
  static Rational parse(std::string_view text);

 private:
  void normalize();

  Integer num_ = 0;
  Integer den_ = 1;
};

class CFExpansion {
 public:
  /// digits must be non-empty with digits[i] >= 1 for i >= 1.
  explicit CFExpansion(std::vector<Integer> digits);

  const std::vector<Integer>& digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  const Integer& operator[](std::size_t i) const { return digits_[i]; }

  bool is_canonical() const;
  /// The other representation of the same value: [.., dk] <-> [.., dk - 1, 1].
  CFExpansion alternate() const;
  Integer digit_sum() const;

  friend bool operator==(const CFExpansion&, const CFExpansion&) = default;

  /// "[d0; d1, d2]" or "[d0]".
  std::string to_string() const;

 private:
  std::vector<Integer> digits_;
};

class CFStream {
 public:
  /// Pure function of the index. Digit 0 is any integer, later digits >= 1.
  using DigitSource = std::function<Integer(std::size_t)>;

  struct Periodic {
    std::vector<Integer> preperiod;  // starts with d0
    std::vector<Integer> period;     // non-empty
  };

  explicit CFStream(DigitSource source, std::optional<Periodic> periodic = std::nullopt);

  /// Eventually periodic stream [pre...; (period)...]. preperiod must hold d0.
  static CFStream periodic(std::vector<Integer> preperiod, std::vector<Integer> period);
  /// [1; 2, 2, 2, ...]
  static CFStream sqrt2();

  /// Throws InvalidArgument if the source yields an invalid digit or one that
  /// contradicts the periodic metadata.
  Integer digit(std::size_t i) const;
  const std::optional<Periodic>& periodic_form() const { return periodic_; }

  /// "[1; 2, 2, ...]" showing `shown` digits, or "[1; (2)]" when periodic.
  std::string to_string(std::size_t shown = 6) const;

 private:
  DigitSource source_;
  std::optional<Periodic> periodic_;
};

CFExpansion cf_expand(const Rational& r);
Rational cf_value(const CFExpansion& cf);
CFExpansion cf_canonicalize(const CFExpansion& cf);

/// The first `count` convergents. Throws OutOfDigits if count > cf.size().
std::vector<Rational> cf_convergents(const CFExpansion& cf, std::size_t count);
std::vector<Rational> cf_convergents(const CFStream& cf, std::size_t count);

/// Sign of rho - t for an irrational stream rho: less or greater. The bracket
/// between consecutive convergents is refined until t falls outside it.
/// Throws IndecisiveComparison after max_iters refinements.
std::strong_ordering stream_compare(const CFStream& rho, const Rational& t, std::size_t max_iters);

}  // namespace cuspval
