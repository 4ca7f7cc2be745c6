#include "cuspval/resolution.hpp"

#include <algorithm>
#include <numeric>

#include "cuspval/errors.hpp"

namespace cuspval {

namespace {

void require_cusp_parameters(std::int64_t a, std::int64_t b, const char* who) {
  if (b <= 1 || a <= b) throw InvalidArgument(std::string(who) + ": need a > b > 1");
  if (std::gcd(a, b) != 1) {
    throw NotCoprime(std::string(who) + ": gcd(" + std::to_string(a) + ", " + std::to_string(b) + ") != 1");
  }
}

// Whether n vanishes in a field of characteristic p.
bool vanishes(std::int64_t n, std::uint64_t p) {
  if (p == 0) return n == 0;
  return static_cast<std::uint64_t>(n < 0 ? -n : n) % p == 0;
}

bool vanishes(const Rational& r, std::uint64_t p) {
  if (p == 0) return r.is_zero();
  return r.numerator() % Integer(p) == 0;
}

}  // namespace

LaurentPolynomial to_polynomial(const ProperTransform& proper) {
  if (const auto* through = std::get_if<ThroughOrigin>(&proper)) {
    return LaurentPolynomial(LaurentMonomial{through->s, 0}) - LaurentPolynomial(LaurentMonomial{0, through->t});
  }
  const auto& misses = std::get<MissesOrigin>(proper);
  return LaurentPolynomial::constant(1) - LaurentPolynomial(LaurentMonomial{misses.k, misses.l});
}

LaurentPolynomial ChartState::reconstruct() const {
  return expand_from_chart(to_polynomial(proper).times(exceptional()), basis);
}

ChartState ChartState::swapped() const {
  ChartState out{ChartBasis(basis.g(), basis.f()), exc_b, exc_a, proper, sign};
  if (const auto* through = std::get_if<ThroughOrigin>(&proper)) {
    out.proper = ThroughOrigin{through->t, through->s};
    out.sign = -sign;
  } else {
    const auto& misses = std::get<MissesOrigin>(proper);
    out.proper = MissesOrigin{misses.l, misses.k};
  }
  return out;
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::resolved:
      return "Resolved";
    case Classification::cusp_singular:
      return "CuspSingular";
    case Classification::tangential_crossing:
      return "TangentialCrossing";
    case Classification::triple_point:
      return "TriplePoint";
  }
  return "?";
}

ChartState initial_chart(std::int64_t a, std::int64_t b) {
  require_cusp_parameters(a, b, "initial_chart");
  return ChartState{ChartBasis::identity(), 0, 0, ThroughOrigin{b, a}, 1};
}

std::pair<ChartState, ChartState> blow_up(const ChartState& c) {
  const auto* through = std::get_if<ThroughOrigin>(&c.proper);
  if (!through) throw InvalidArgument("blow_up: proper transform misses the chart origin");
  const std::int64_t s = through->s, t = through->t;
  const std::int64_t A = c.exc_a, B = c.exc_b;
  const LaurentMonomial& f = c.basis.f();
  const LaurentMonomial& g = c.basis.g();

  // (f, g/f): substitute g = f*w.
  ChartState first{ChartBasis(f, g / f), 0, B, ThroughOrigin{}, c.sign};
  if (s > t) {
    first.exc_a = A + B + t;
    first.proper = ThroughOrigin{s - t, t};
  } else {
    first.exc_a = A + B + s;
    first.proper = MissesOrigin{t - s, t};
  }

  // (g, f/g): substitute f = g*z; the binomial changes sign.
  ChartState second{ChartBasis(g, f / g), 0, A, ThroughOrigin{}, -c.sign};
  if (t > s) {
    second.exc_a = A + B + s;
    second.proper = ThroughOrigin{t - s, s};
  } else {
    second.exc_a = A + B + t;
    second.proper = MissesOrigin{s - t, s};
  }
  return {first, second};
}

Classification classify(const ChartState& c) {
  const auto* through = std::get_if<ThroughOrigin>(&c.proper);
  if (!through) return Classification::resolved;
  const std::int64_t s = through->s, t = through->t;
  if (s >= 2 && t >= 2) return Classification::cusp_singular;
  // c1^s - c2^t with s >= 2, t = 1 is tangent to the axis c2 = 0 at the origin.
  if (s >= 2) return c.exc_b >= 1 ? Classification::tangential_crossing : Classification::resolved;
  if (t >= 2) return c.exc_a >= 1 ? Classification::tangential_crossing : Classification::resolved;
  return c.exc_a >= 1 && c.exc_b >= 1 ? Classification::triple_point : Classification::resolved;
}

ChartState chart_from_lattice(std::int64_t a, std::int64_t b, const ChartBasis& basis) {
  auto [a1, b1] = lattice_solve(LaurentMonomial{b, 0}, basis);  // x^b
  auto [a2, b2] = lattice_solve(LaurentMonomial{0, a}, basis);  // y^a
  ChartState out{basis, std::min(a1, a2), std::min(b1, b2), ThroughOrigin{}, 1};
  const LaurentMonomial r1{a1 - out.exc_a, b1 - out.exc_b};
  const LaurentMonomial r2{a2 - out.exc_a, b2 - out.exc_b};
  if (r1.is_unit()) {
    out.proper = MissesOrigin{r2.ex, r2.ey};
  } else if (r2.is_unit()) {
    out.proper = MissesOrigin{r1.ex, r1.ey};
    out.sign = -1;
  } else if (r1.ey == 0 && r2.ex == 0) {
    out.proper = ThroughOrigin{r1.ex, r2.ey};
  } else if (r1.ex == 0 && r2.ey == 0) {
    out.proper = ThroughOrigin{r2.ex, r1.ey};
    out.sign = -1;
  } else {
    throw InvariantViolation("chart_from_lattice: unexpected residual exponents");
  }
  return out;
}

bool reconstruction_holds(const ChartState& c, std::int64_t a, std::int64_t b) {
  return c.reconstruct() == LaurentPolynomial::cusp(a, b) * Rational(c.sign);
}

ResolutionTrace resolve(std::int64_t a, std::int64_t b) {
  ResolutionTrace trace;
  trace.a = a;
  trace.b = b;
  ChartState current = initial_chart(a, b);
  // Each blow-up lowers s + t, so a + b steps bound the loop.
  for (std::int64_t guard = 0; guard <= a + b; ++guard) {
    const Classification cls = classify(current);
    if (cls == Classification::resolved) throw InvariantViolation("resolve: blowing up a resolved chart");
    auto [first, second] = blow_up(current);
    BlowUpStep step{{current, cls}, {ClassifiedChart{first, classify(first)}, ClassifiedChart{second, classify(second)}}};
    const auto bad = std::count_if(step.children.begin(), step.children.end(),
                                   [](const ClassifiedChart& cc) { return cc.classification != Classification::resolved; });
    if (bad > 1) {
      throw InvariantViolation("resolve: two unresolved charts after blowing up " + current.vertex().to_string());
    }
    trace.steps.push_back(step);
    if (bad == 0) return trace;
    current = step.children[0].classification != Classification::resolved ? step.children[0].chart
                                                                          : step.children[1].chart;
  }
  throw InvariantViolation("resolve: did not terminate");
}

PositivePath bad_vertex_path(const ResolutionTrace& trace) {
  PositivePath path;
  for (const auto& step : trace.steps) path.vertices.push_back(step.center.chart.vertex());
  return path;
}

TheoremCheck check_theorem(std::int64_t a, std::int64_t b) {
  TheoremCheck out;
  out.bad_path = bad_vertex_path(resolve(a, b));
  out.positive_path = positive_path(MonomialValuation::rational(a, b));
  out.equal = out.bad_path.vertices == out.positive_path.vertices;
  return out;
}

bool is_smooth_component(const ProperTransform& component, std::uint64_t characteristic) {
  if (const auto* through = std::get_if<ThroughOrigin>(&component)) {
    const std::int64_t s = through->s, t = through->t;
    // Gradient (s*c1^(s-1), -t*c2^(t-1)): at the origin it vanishes unless an
    // exponent is 1 with a unit coefficient; elsewhere on the curve both
    // coordinates are nonzero.
    const bool singular_at_origin = (s >= 2 || vanishes(s, characteristic)) && (t >= 2 || vanishes(t, characteristic));
    const bool singular_elsewhere = vanishes(s, characteristic) && vanishes(t, characteristic);
    return !singular_at_origin && !singular_elsewhere;
  }
  const auto& misses = std::get<MissesOrigin>(component);
  // On 1 = c1^k c2^l both coordinates are units, so the gradient vanishes iff
  // k and l vanish in the field.
  return !(vanishes(misses.k, characteristic) && vanishes(misses.l, characteristic));
}

CrossingReport check_off_origin_crossings(const ChartState& c, std::uint64_t characteristic) {
  CrossingReport report;
  const auto* misses = std::get_if<MissesOrigin>(&c.proper);
  if (!misses) return report;  // c1^s - c2^t meets the axes only at the origin

  const LaurentPolynomial F = to_polynomial(c.proper);
  const LaurentPolynomial dF[2] = {F.partial(0), F.partial(1)};

  // Axis c_i = 0 meets F = 0 only if the exponent of c_i in F is zero; then the
  // other coordinate runs over the e-th roots of unity.
  auto check_axis = [&](int axis, std::int64_t own_exp, std::int64_t other_exp) {
    if (own_exp != 0) return;
    std::vector<Rational> roots{Rational(1)};
    if (other_exp % 2 == 0 && characteristic != 2) roots.emplace_back(-1);
    const std::size_t expected = static_cast<std::size_t>(other_exp < 0 ? -other_exp : other_exp);
    for (const auto& r : roots) {
      const Rational px = axis == 0 ? Rational(0) : r;
      const Rational py = axis == 0 ? r : Rational(0);
      if (!vanishes(F.evaluate(px, py), characteristic)) continue;
      ++report.points_checked;
      // Normal of the axis is e_axis; transversal iff the other gradient component is nonzero.
      const Rational along = dF[1 - axis].evaluate(px, py);
      if (vanishes(along, characteristic)) report.transversal = false;
    }
    if (expected > roots.size()) report.points_skipped += expected - roots.size();
  };
  if (c.exc_a > 0) check_axis(0, misses->k, misses->l);
  if (c.exc_b > 0) check_axis(1, misses->l, misses->k);
  return report;
}

}  // namespace cuspval
