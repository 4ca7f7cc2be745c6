#pragma once

/**
 * @file valtree.hpp
 * @brief The valuation tree and positive paths.
 *
 * Vertices are rings k[f, g] for unimodular pairs of Laurent monomials, rooted
 * at k[x, y]; k[f, g] has children k[f, g/f] and k[g, f/g]. The tree is never
 * materialized. For a monomial valuation nu, the positive path is the chain of
 * vertices whose generators all have positive value.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cuspval/exactnum.hpp"
#include "cuspval/laurent.hpp"
#include "cuspval/valuation.hpp"

namespace cuspval {

class TreeVertex {
 public:
  /// Throws NonUnimodular.
  TreeVertex(LaurentMonomial f, LaurentMonomial g) : basis_(f, g) {}
  explicit TreeVertex(ChartBasis basis) : basis_(std::move(basis)) {}
  static TreeVertex root() { return TreeVertex(ChartBasis::identity()); }

  const LaurentMonomial& f() const { return basis_.f(); }
  const LaurentMonomial& g() const { return basis_.g(); }
  const ChartBasis& basis() const { return basis_; }
  bool has_generator(const LaurentMonomial& m) const { return f() == m || g() == m; }

  /// The ring k[f, g] does not depend on generator order.
  friend bool operator==(const TreeVertex& a, const TreeVertex& b) {
    return (a.f() == b.f() && a.g() == b.g()) || (a.f() == b.g() && a.g() == b.f());
  }

  /// "k[x/y, y^2/x]"
  std::string to_string() const;

 private:
  ChartBasis basis_;
};

/// (k[f, g/f], k[g, f/g])
std::pair<TreeVertex, TreeVertex> children(const TreeVertex& v);

bool is_positive(const MonomialValuation& nu, const TreeVertex& v);

/// The unique positive child of a positive vertex, or nullopt when nu(f) = nu(g).
std::optional<TreeVertex> positive_child(const MonomialValuation& nu, const TreeVertex& v);

enum class PathStatus { complete, truncated };

struct PositivePath {
  std::vector<TreeVertex> vertices;
  PathStatus status = PathStatus::complete;

  bool complete() const { return status == PathStatus::complete; }
  std::size_t size() const { return vertices.size(); }
};

inline constexpr std::size_t kDefaultMaxSteps = 64;

/// Walks the positive path from k[x, y]. Rational-ratio valuations always give a
/// complete path (it is finite); other groups stop after max_steps vertices with
/// status truncated. Throws InvalidArgument if nu(x) = nu(y) or k[x, y] is not
/// positive.
PositivePath positive_path(const MonomialValuation& nu, std::size_t max_steps = kDefaultMaxSteps);

/// Maximal run of path vertices k[s, t/s^m], m = 1..length.
struct Branch {
  LaurentMonomial s;
  LaurentMonomial t;
  std::size_t length = 0;
};

/// Branches in path order; k[x, y] counts as k[y, x/y^0], the start of B(y, x).
/// Throws InvalidArgument for paths with fewer than two vertices, or whose
/// consecutive vertices are not parent and child.
std::vector<Branch> branch_decomposition(const PositivePath& path);

struct CFCorrespondence {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::vector<std::size_t> branch_lengths;
  CFExpansion expansion{std::vector<Integer>{0}};
  /// (d0, ..., d_{n-1}, d_n - 1), dropping a trailing zero.
  std::vector<Integer> expected_lengths;
  bool match = false;
};

/// Branch lengths of the positive path for nu(x) = a, nu(y) = b against the
/// canonical continued fraction of a/b. Requires gcd(a, b) = 1 and a > b >= 1.
CFCorrespondence cf_correspondence_check(std::int64_t a, std::int64_t b);

/// The Z^2-lex valuation with nu(f) = (0, 1) and nu(g) = (1, 0); every vertex
/// k[f, g/f^t] is then positive. Throws NonUnimodular.
MonomialValuation lex_valuation_from_tail(const LaurentMonomial& f, const LaurentMonomial& g);

}  // namespace cuspval
