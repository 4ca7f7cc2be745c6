#include "cuspval/valtree.hpp"

#include <numeric>

#include "cuspval/errors.hpp"

namespace cuspval {

std::string TreeVertex::to_string() const {
  return "k[" + cuspval::to_string(f()) + ", " + cuspval::to_string(g()) + "]";
}

std::pair<TreeVertex, TreeVertex> children(const TreeVertex& v) {
  return {TreeVertex(v.f(), v.g() / v.f()), TreeVertex(v.g(), v.f() / v.g())};
}

bool is_positive(const MonomialValuation& nu, const TreeVertex& v) {
  return nu.sign(nu.value_of(v.f())) > 0 && nu.sign(nu.value_of(v.g())) > 0;
}

std::optional<TreeVertex> positive_child(const MonomialValuation& nu, const TreeVertex& v) {
  auto o = nu.compare(nu.value_of(v.f()), nu.value_of(v.g()));
  if (o == 0) return std::nullopt;
  auto [keep_f, keep_g] = children(v);
  // nu(f) > nu(g) makes f/g positive and g/f negative.
  return o > 0 ? keep_g : keep_f;
}

PositivePath positive_path(const MonomialValuation& nu, std::size_t max_steps) {
  if (max_steps == 0) throw InvalidArgument("positive_path: max_steps must be positive");
  if (nu.compare(Value{1, 0}, Value{0, 1}) == 0) {
    throw InvalidArgument("positive_path: nu(x) = nu(y) is not allowed");
  }
  TreeVertex v = TreeVertex::root();
  if (!is_positive(nu, v)) throw InvalidArgument("positive_path: k[x, y] is not positive");
  const bool finite = std::holds_alternative<RationalRatio>(nu.group());

  PositivePath path;
  path.vertices.push_back(v);
  while (true) {
    if (!finite && path.vertices.size() >= max_steps) {
      path.status = PathStatus::truncated;
      break;
    }
    auto next = positive_child(nu, path.vertices.back());
    if (!next) break;
    path.vertices.push_back(std::move(*next));
  }
  return path;
}

namespace {

struct Step {
  LaurentMonomial pivot;  // the generator kept from parent to child
  LaurentMonomial other;  // parent's other generator; child is k[pivot, other/pivot]
};

Step classify_step(const TreeVertex& parent, const TreeVertex& child) {
  auto [c1, c2] = children(parent);
  if (child == c1) return {parent.f(), parent.g()};
  if (child == c2) return {parent.g(), parent.f()};
  throw InvalidArgument("branch_decomposition: " + child.to_string() + " is not a child of " +
                        parent.to_string());
}

}  // namespace

std::vector<Branch> branch_decomposition(const PositivePath& path) {
  if (path.vertices.size() < 2) throw InvalidArgument("branch_decomposition: path needs two vertices");
  std::vector<Branch> branches;
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    Step step = classify_step(path.vertices[i], path.vertices[i + 1]);
    if (!branches.empty() && branches.back().s == step.pivot) {
      ++branches.back().length;
    } else {
      branches.push_back({step.pivot, step.other, 1});
    }
  }
  return branches;
}

CFCorrespondence cf_correspondence_check(std::int64_t a, std::int64_t b) {
  if (b < 1 || a <= b) throw InvalidArgument("cf_correspondence_check: need a > b >= 1");
  if (std::gcd(a, b) != 1) {
    throw NotCoprime("cf_correspondence_check: gcd(" + std::to_string(a) + ", " + std::to_string(b) + ") != 1");
  }
  CFCorrespondence report;
  report.a = a;
  report.b = b;
  PositivePath path = positive_path(MonomialValuation::rational(a, b));
  for (const auto& br : branch_decomposition(path)) report.branch_lengths.push_back(br.length);

  report.expansion = cf_expand(Rational(Integer(a), Integer(b)));
  report.expected_lengths = report.expansion.digits();
  report.expected_lengths.back() -= 1;
  if (report.expected_lengths.back() == 0) report.expected_lengths.pop_back();

  report.match = report.branch_lengths.size() == report.expected_lengths.size();
  for (std::size_t i = 0; report.match && i < report.branch_lengths.size(); ++i) {
    report.match = Integer(report.branch_lengths[i]) == report.expected_lengths[i];
  }
  return report;
}

MonomialValuation lex_valuation_from_tail(const LaurentMonomial& f, const LaurentMonomial& g) {
  ChartBasis basis(f, g);  // validates unimodularity
  const std::int64_t det = basis.determinant();
  // Invert [f.ex f.ey; g.ex g.ey] * [nu(x); nu(y)] = [(0,1); (1,0)].
  Z2 vx{det * -f.ey, det * g.ey};
  Z2 vy{det * f.ex, det * -g.ex};
  return MonomialValuation::lex(vx, vy);
}

}  // namespace cuspval
