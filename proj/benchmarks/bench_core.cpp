#include <benchmark/benchmark.h>

#include <numeric>

#include "cuspval/exactnum.hpp"
#include "cuspval/resolution.hpp"
#include "cuspval/valring.hpp"
#include "cuspval/valtree.hpp"

namespace {

using namespace cuspval;

// Consecutive Fibonacci numbers: the longest expansion for their size.
std::pair<std::int64_t, std::int64_t> fibonacci_pair(int n) {
  std::int64_t a = 2, b = 1;
  for (int i = 0; i < n; ++i) {
    const std::int64_t next = a + b;
    b = a;
    a = next;
  }
  return {a, b};
}

void BM_CfExpand(benchmark::State& state) {
  const auto [a, b] = fibonacci_pair(static_cast<int>(state.range(0)));
  const Rational r{Integer(a), Integer(b)};
  for (auto _ : state) benchmark::DoNotOptimize(cf_expand(r));
}
BENCHMARK(BM_CfExpand)->Arg(10)->Arg(40)->Arg(80);

void BM_PositivePathRational(benchmark::State& state) {
  const auto [a, b] = fibonacci_pair(static_cast<int>(state.range(0)));
  const auto nu = MonomialValuation::rational(a, b);
  for (auto _ : state) benchmark::DoNotOptimize(positive_path(nu));
}
BENCHMARK(BM_PositivePathRational)->Arg(10)->Arg(40);

void BM_PositivePathSqrt2(benchmark::State& state) {
  const auto nu = MonomialValuation::stream(CFStream::sqrt2());
  const auto steps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(positive_path(nu, steps));
}
BENCHMARK(BM_PositivePathSqrt2)->Arg(16)->Arg(64);

void BM_Resolve(benchmark::State& state) {
  const auto [a, b] = fibonacci_pair(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(resolve(a, b));
}
BENCHMARK(BM_Resolve)->Arg(5)->Arg(15)->Arg(25);

void BM_CheckTheoremSweep(benchmark::State& state) {
  const std::int64_t max_a = state.range(0);
  for (auto _ : state) {
    for (std::int64_t a = 3; a <= max_a; ++a) {
      for (std::int64_t b = 2; b < a; ++b) {
        if (std::gcd(a, b) == 1) benchmark::DoNotOptimize(check_theorem(a, b));
      }
    }
  }
}
BENCHMARK(BM_CheckTheoremSweep)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_MembershipStructural(benchmark::State& state) {
  const RingPresentation pres = ring_generators(24, 7);
  const LaurentPolynomial num = LaurentPolynomial::cusp(24, 7) * LaurentPolynomial(LaurentMonomial{3, 1});
  const RationalFunction r(num, LaurentPolynomial::cusp(5, 3));
  for (auto _ : state) benchmark::DoNotOptimize(membership_structural(r, pres));
}
BENCHMARK(BM_MembershipStructural);

void BM_MembershipUnion(benchmark::State& state) {
  const auto nu = MonomialValuation::stream(CFStream::sqrt2());
  const LaurentMonomial m{-99, 70};
  for (auto _ : state) benchmark::DoNotOptimize(membership_union(m, nu));
}
BENCHMARK(BM_MembershipUnion);

}  // namespace

BENCHMARK_MAIN();
