#include "verify.hpp"

#include <atomic>
#include <numeric>
#include <thread>

#include "cuspval/exactnum.hpp"
#include "cuspval/resolution.hpp"
#include "cuspval/valtree.hpp"

namespace cuspval::cli {

PairResult verify_pair(std::int64_t a, std::int64_t b) {
  PairResult r;
  r.a = a;
  r.b = b;
  try {
    const ResolutionTrace trace = resolve(a, b);
    const PositivePath bad = bad_vertex_path(trace);
    const PositivePath pos = positive_path(MonomialValuation::rational(a, b));
    r.theorem = bad.vertices == pos.vertices;
    r.correspondence = cf_correspondence_check(a, b).match;
    r.count = Integer(trace.blow_up_count()) == cf_expand(Rational(Integer(a), Integer(b))).digit_sum();
    r.reconstruction = true;
    for (const auto& step : trace.steps) {
      r.reconstruction = r.reconstruction && reconstruction_holds(step.center.chart, a, b);
      for (const auto& child : step.children) {
        r.reconstruction = r.reconstruction && reconstruction_holds(child.chart, a, b);
      }
    }
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

VerifyReport run_verify(std::int64_t max_a, unsigned threads) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::int64_t a = 3; a <= max_a; ++a) {
    for (std::int64_t b = 2; b < a; ++b) {
      if (std::gcd(a, b) == 1) pairs.emplace_back(a, b);
    }
  }

  std::vector<PairResult> results(pairs.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(pairs.size(), 1));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) results[i] = verify_pair(pairs[i].first, pairs[i].second);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  VerifyReport report;
  report.max_a = max_a;
  report.pairs = results.size();
  for (const auto& r : results) {
    report.theorem_passed += r.theorem;
    report.correspondence_passed += r.correspondence;
    report.count_passed += r.count;
    report.reconstruction_passed += r.reconstruction;
    if (!r.passed()) {
      ++report.failed;
      if (!report.first_counterexample) report.first_counterexample = r;
    }
  }
  return report;
}

}  // namespace cuspval::cli
