#pragma once

/**
 * @file resolution.hpp
 * @brief Blow-up resolution of the cusp x^b = y^a.
 *
 * A chart is an affine plane with coordinates (c1, c2), Laurent monomials in x
 * and y. In it the total transform of the cusp factors as
 *
 *     c1^excA * c2^excB * P  =  sign * (x^b - y^a)
 *
 * with the proper transform P either c1^s - c2^t (through the origin) or
 * 1 - c1^k * c2^l (missing the origin). Blow-ups always happen at the chart
 * origin; the two children have coordinates (c1, c2/c1) and (c2, c1/c2).
 */

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "cuspval/laurent.hpp"
#include "cuspval/valtree.hpp"

namespace cuspval {

/// c1^s - c2^t
struct ThroughOrigin {
  std::int64_t s = 1;
  std::int64_t t = 1;
  friend bool operator==(const ThroughOrigin&, const ThroughOrigin&) = default;
};

/// 1 - c1^k * c2^l
struct MissesOrigin {
  std::int64_t k = 0;
  std::int64_t l = 0;
  friend bool operator==(const MissesOrigin&, const MissesOrigin&) = default;
};

using ProperTransform = std::variant<ThroughOrigin, MissesOrigin>;

/// The proper transform as a polynomial in chart coordinates.
LaurentPolynomial to_polynomial(const ProperTransform& proper);

struct ChartState {
  ChartBasis basis = ChartBasis::identity();
  std::int64_t exc_a = 0;  // exceptional multiplicity on c1
  std::int64_t exc_b = 0;  // exceptional multiplicity on c2
  ProperTransform proper = ThroughOrigin{};
  int sign = 1;

  bool through_origin() const { return std::holds_alternative<ThroughOrigin>(proper); }
  /// c1^excA * c2^excB in chart coordinates.
  LaurentMonomial exceptional() const { return {exc_a, exc_b}; }
  /// c1^excA * c2^excB * P expanded in x, y.
  LaurentPolynomial reconstruct() const;
  /// The same chart with c1 and c2 exchanged.
  ChartState swapped() const;
  TreeVertex vertex() const { return TreeVertex(basis); }

  friend bool operator==(const ChartState&, const ChartState&) = default;
};

enum class Classification { resolved, cusp_singular, tangential_crossing, triple_point };

std::string_view to_string(Classification c);

/// Curve x^b - y^a in the chart (x, y). Requires a > b > 1, gcd(a, b) = 1.
ChartState initial_chart(std::int64_t a, std::int64_t b);

/// Blows up the origin. Throws InvalidArgument when the proper transform misses it.
std::pair<ChartState, ChartState> blow_up(const ChartState& c);

/// Origin-local classification of the total transform.
Classification classify(const ChartState& c);

/// The chart state obtained directly: write x^b and y^a in the basis and
/// factor out the common monomial.
ChartState chart_from_lattice(std::int64_t a, std::int64_t b, const ChartBasis& basis);

/// reconstruct() == sign * (x^b - y^a).
bool reconstruction_holds(const ChartState& c, std::int64_t a, std::int64_t b);

struct ClassifiedChart {
  ChartState chart;
  Classification classification = Classification::resolved;
};

struct BlowUpStep {
  ClassifiedChart center;
  std::array<ClassifiedChart, 2> children;
};

struct ResolutionTrace {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::vector<BlowUpStep> steps;

  std::size_t blow_up_count() const { return steps.size(); }
};

/// Blows up the unique unresolved chart until none is left. Throws
/// InvariantViolation if a blow-up ever leaves two unresolved charts.
ResolutionTrace resolve(std::int64_t a, std::int64_t b);

/// The blown-up charts as tree vertices.
PositivePath bad_vertex_path(const ResolutionTrace& trace);

struct TheoremCheck {
  PositivePath bad_path;
  PositivePath positive_path;
  bool equal = false;
};

/// Compares the resolution's bad path with the positive path of nu(x) = a, nu(y) = b.
TheoremCheck check_theorem(std::int64_t a, std::int64_t b);

/// Jacobian criterion for a proper-transform component over a field of the
/// given characteristic (0 or a prime).
bool is_smooth_component(const ProperTransform& component, std::uint64_t characteristic = 0);

struct CrossingReport {
  std::size_t points_checked = 0;
  std::size_t points_skipped = 0;
  bool transversal = true;
};

/// Intersections of the proper transform with the exceptional axes away from
/// the origin. Points with rational coordinates are checked for transversality;
/// the rest (non-rational roots of unity) are counted as skipped.
CrossingReport check_off_origin_crossings(const ChartState& c, std::uint64_t characteristic = 0);

}  // namespace cuspval
