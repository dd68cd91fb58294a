#include "toepdet/verify.hpp"

#include <sstream>

#include "toepdet/detengine.hpp"
#include "toepdet/oracle.hpp"

namespace toepdet {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::int64_t SplitMix64::range(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

BandSpec<Rational> random_int_spec(SplitMix64& rng, int k_min, int k_max) {
  const int k = static_cast<int>(rng.range(k_min, k_max));
  const int s = static_cast<int>(rng.range(1, k - 1));
  BandSpec<Rational> spec;
  spec.s = s;
  spec.r = k - s;
  spec.coeffs.reserve(k + 1);
  for (int i = 0; i <= k; ++i) {
    long v = rng.range(-9, 9);
    if ((i == s || i == k) && v == 0) v = rng.next() & 1 ? 1 : -1;
    spec.coeffs.emplace_back(v);
  }
  return spec;
}

VerifyReport run_verify(const VerifyConfig& config) {
  SplitMix64 rng(config.seed);
  VerifyReport report;
  report.trials = config.trials;
  for (int t = 0; t < config.trials; ++t) {
    const BandSpec<Rational> spec = random_int_spec(rng, config.k_min, config.k_max);
    const std::uint64_t n = static_cast<std::uint64_t>(
        rng.range(spec.k(), static_cast<std::int64_t>(config.n_max)));

    Rational fast_pm = det(spec, n, Strategy::PolyMod).value;
    Rational fast_de = det(spec, n, Strategy::Dense).value;
    if (config.sabotage) {
      fast_pm = -fast_pm;
      fast_de = -fast_de;
    }
    const Rational bareiss = oracle::dense_det_bareiss(dense(spec, n));
    const Rational reduction = oracle::reduction_det(spec, n);

    if (!(fast_pm == bareiss && fast_de == bareiss && reduction == bareiss)) {
      report.failures.push_back({spec_to_json(spec), n, fast_pm.get_str(),
                                 fast_de.get_str(), bareiss.get_str(),
                                 reduction.get_str()});
    }
  }
  return report;
}

std::string format_report(const VerifyConfig& config, const VerifyReport& report) {
  std::ostringstream out;
  out << "verify: k in [" << config.k_min << "," << config.k_max << "], n <= "
      << config.n_max << ", seed " << config.seed << "\n";
  for (const auto& f : report.failures) {
    out << "MISMATCH spec=" << f.spec_json << " n=" << f.n
        << " polymod=" << f.fast_polymod << " dense=" << f.fast_dense
        << " bareiss=" << f.bareiss << " reduction=" << f.reduction << "\n";
  }
  const int passed = report.trials - static_cast<int>(report.failures.size());
  out << passed << "/" << report.trials << " ok\n";
  return out.str();
}

}  // namespace toepdet
