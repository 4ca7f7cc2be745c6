#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cuspval::cli {

struct PairResult {
  std::int64_t a = 0;
  std::int64_t b = 0;
  bool theorem = false;         // bad path == positive path
  bool correspondence = false;  // branch lengths match CF digits
  bool count = false;           // blow-ups == CF digit sum
  bool reconstruction = false;  // every chart reproduces +-(x^b - y^a)
  std::string error;            // set if a check threw

  bool passed() const { return theorem && correspondence && count && reconstruction && error.empty(); }
};

struct VerifyReport {
  std::int64_t max_a = 0;
  std::size_t pairs = 0;
  std::size_t theorem_passed = 0;
  std::size_t correspondence_passed = 0;
  std::size_t count_passed = 0;
  std::size_t reconstruction_passed = 0;
  std::size_t failed = 0;
  std::optional<PairResult> first_counterexample;

  bool ok() const { return failed == 0; }
};

PairResult verify_pair(std::int64_t a, std::int64_t b);

/// Every coprime pair 1 < b < a <= max_a. Pairs run on `threads` workers
/// (0 = hardware concurrency); results are aggregated in (a, b) order.
VerifyReport run_verify(std::int64_t max_a, unsigned threads = 0);

}  // namespace cuspval::cli
