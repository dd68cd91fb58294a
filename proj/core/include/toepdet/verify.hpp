#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toepdet/bandspec.hpp"

namespace toepdet {

/// Configuration of the randomized three-way agreement sweep: the fast engine
/// (both strategies) against the dense Bareiss oracle and the reduction chain.
struct VerifyConfig {
  int k_min = 2;
  int k_max = 6;
  std::uint64_t n_max = 60;
  int trials = 200;
  std::uint64_t seed = 1;
  bool sabotage = false;  // flips the (-1)^{ns} factor on the fast path
};

struct VerifyFailure {
  std::string spec_json;
  std::uint64_t n = 0;
  std::string fast_polymod;
  std::string fast_dense;
  std::string bareiss;
  std::string reduction;
};

struct VerifyReport {
  int trials = 0;
  std::vector<VerifyFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Deterministic under a fixed seed: the generator and all draws are fully
/// specified here, independent of the standard library's distributions.
VerifyReport run_verify(const VerifyConfig& config);

/// Plain-text report; byte-identical across runs with the same config.
std::string format_report(const VerifyConfig& config, const VerifyReport& report);

/// Draws a random integer-coefficient spec (coefficients in [-9,9], band ends
/// nonzero, 1 <= s <= k-1). Exposed for the test suites.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform-ish draw in [lo, hi]; bias is irrelevant at these ranges.
  std::int64_t range(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

BandSpec<Rational> random_int_spec(SplitMix64& rng, int k_min, int k_max);

}  // namespace toepdet
