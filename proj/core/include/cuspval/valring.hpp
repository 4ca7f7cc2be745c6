#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>

#include "cuspval/laurent.hpp"
#include "cuspval/valtree.hpp"
#include "cuspval/valuation.hpp"

namespace cuspval {

struct BezoutPair {
  std::int64_t p = 0;
  std::int64_t q = 0;
  friend bool operator==(BezoutPair, BezoutPair) = default;
};

/// Smallest positive p (hence q) with p*a - q*b = 1. Requires a > b >= 1 and
/// gcd(a, b) = 1; throws NotCoprime / InvalidArgument otherwise.
BezoutPair bezout(std::int64_t a, std::int64_t b);

/// The valuation ring of nu(x) = a, nu(y) = b is the localization of k[u, v]
/// at the prime (v), where u = y^a/x^b has value 0 and v = x^p/y^q value 1.
struct RingPresentation {
  LaurentMonomial u;
  LaurentMonomial v;
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;

  ChartBasis basis() const { return {u, v}; }
};

RingPresentation ring_generators(std::int64_t a, std::int64_t b);

struct StructuralMembership {
  bool member = false;
  /// n - m, where v^n and v^m are the largest powers of v dividing the
  /// numerator and denominator in (u, v) coordinates.
  std::int64_t gap = 0;
  /// h and h' (numerator and denominator with their v-powers removed), as
  /// polynomials in (u, v) coordinates.
  LaurentPolynomial unit_numerator;
  LaurentPolynomial unit_denominator;
};

/// Membership in k[u, v]_(v) by rewriting r in (u, v) coordinates.
/// Throws ZeroPolynomial for a zero numerator.
StructuralMembership membership_structural(const RationalFunction& r, const RingPresentation& pres);

/// nu(r) >= 0. Throws ZeroPolynomial for r = 0 (infinite value, trivially a member
/// but not representable).
bool membership_by_value(const RationalFunction& r, const MonomialValuation& nu);

struct UnionMembership {
  std::optional<std::size_t> vertex_index;
  std::optional<TreeVertex> vertex;
  /// Exponents of m in the found vertex's generators.
  std::pair<std::int64_t, std::int64_t> exponents{0, 0};
  std::size_t vertices_searched = 0;

  bool found() const { return vertex_index.has_value(); }
};

/// First vertex of the positive path (up to max_steps vertices) whose
/// generators express m with nonnegative exponents.
UnionMembership membership_union(const LaurentMonomial& m, const MonomialValuation& nu,
                                 std::size_t max_steps = kDefaultMaxSteps);

}  // namespace cuspval
