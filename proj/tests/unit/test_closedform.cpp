#include <doctest.h>

#include <cmath>

#include <toepdet/closedform.hpp>
#include <toepdet/verify.hpp>

#include "test_util.hpp"

using namespace toepdet;
using testutil::rat;
using testutil::spec_of;

namespace {

RootMultiset<Rational> roots_of(std::vector<std::pair<long, int>> entries) {
  RootMultiset<Rational> out;
  for (auto [root, mult] : entries) out.roots.push_back({rat(root), mult});
  return out;
}

}  // namespace

TEST_CASE("lucas_U initial values and Fibonacci") {
  CHECK(lucas_U(rat(7), rat(5), 0) == rat(0));
  CHECK(lucas_U(rat(7), rat(5), 1) == rat(1));
  CHECK(lucas_U(rat(1), rat(-1), 10) == rat(55));  // Fibonacci
}

TEST_CASE("lucas_U satisfies its defining recurrence") {
  SplitMix64 rng(61);
  for (int trial = 0; trial < 25; ++trial) {
    const Rational p = rat(rng.range(-9, 9), rng.range(1, 5));
    const Rational q = rat(rng.range(-9, 9), rng.range(1, 5));
    const std::uint64_t n = rng.next() % 99;
    CHECK(lucas_U(p, q, n + 2) == p * lucas_U(p, q, n + 1) - q * lucas_U(p, q, n));
  }
}

TEST_CASE("tridiag_det closed form") {
  const auto spec = spec_of(1, 1, {6, 2, 5});  // a=6, b=2, c=5
  CHECK(tridiag_det(spec, 1) == rat(6));            // det(T_1) = a
  CHECK(tridiag_det(spec, 2) == rat(26));           // det(T_2) = a^2 - bc
  const auto plus_one = spec_of(1, 1, {2, 1, 1});
  for (std::uint64_t n = 1; n <= 30; ++n)
    CHECK(tridiag_det(plus_one, n) == rat(static_cast<long>(n + 1)));

  CHECK_THROWS_AS(tridiag_det(spec_of(2, 2, {1, 1, 1, 1, 1}), 4), Error);
}

TEST_CASE("tridiag_det equals the engine on random bands") {
  SplitMix64 rng(62);
  for (int trial = 0; trial < 100; ++trial) {
    BandSpec<Rational> spec;
    spec.s = spec.r = 1;
    spec.coeffs = {rat(rng.range(-9, 9)), rat(0), rat(0)};
    while (is_zero(spec.coeffs[1])) spec.coeffs[1] = rat(rng.range(-9, 9));
    while (is_zero(spec.coeffs[2])) spec.coeffs[2] = rat(rng.range(-9, 9));
    const std::uint64_t n = 1 + rng.next() % 50;
    CHECK(tridiag_det(spec, n) == det(spec, n).value);
  }
}

TEST_CASE("tridiag_det float mode tracks the Binet evaluation") {
  SplitMix64 rng(63);
  int checked = 0;
  while (checked < 30) {
    const double a = static_cast<double>(rng.range(-9, 9));
    const double b = static_cast<double>(rng.range(1, 9));
    const double c = static_cast<double>(rng.range(-9, -1));
    const double disc = a * a - 4 * b * c;
    if (disc <= 0.0) continue;
    const std::uint64_t n = 1 + rng.next() % 25;
    const double root = std::sqrt(disc);
    const double alpha = (a + root) / 2, beta = (a - root) / 2;
    const double binet = (std::pow(alpha, double(n + 1)) - std::pow(beta, double(n + 1))) / root;
    if (std::fabs(binet) < 1e-6) continue;  // too close to a sign change

    BandSpec<ScaledValue> spec;
    spec.s = spec.r = 1;
    spec.coeffs = {scaled_from(a), scaled_from(b), scaled_from(c)};
    const double got = scaled_to_double(tridiag_det(spec, n));
    CHECK(std::fabs(got - binet) <= 1e-9 * std::fabs(binet));
    ++checked;
  }
}

TEST_CASE("penta_case_of classifies multiplicity patterns") {
  CHECK(penta_case_of(roots_of({{2, 1}, {3, 1}, {5, 1}, {7, 1}})) == PentaCase::I);
  CHECK(penta_case_of(roots_of({{1, 2}, {2, 1}, {3, 1}})) == PentaCase::II);
  CHECK(penta_case_of(roots_of({{2, 2}, {3, 2}})) == PentaCase::III);
  CHECK(penta_case_of(roots_of({{2, 3}, {3, 1}})) == PentaCase::IV);
  CHECK(penta_case_of(roots_of({{2, 4}})) == PentaCase::V);
  CHECK_THROWS_AS(penta_case_of(roots_of({{2, 2}, {3, 1}})), Error);        // sum 3
  CHECK_THROWS_AS(penta_case_of(roots_of({{2, 2}, {2, 1}, {3, 1}})), Error);  // repeated root
}

TEST_CASE("penta_det reproduces the printed Case I series") {
  // Roots 2,3,5,7 with c=1:
  // (1/120)(-6*10^{n+2} + 5*15^{n+2} + 6^{n+2} - 6*21^{n+2} + 5*14^{n+2} + 35^{n+2})
  const auto roots = roots_of({{2, 1}, {3, 1}, {5, 1}, {7, 1}});
  for (std::uint64_t n = 4; n <= 15; ++n) {
    const Rational expected =
        (rat(-6) * pow_int(rat(10), n + 2) + rat(5) * pow_int(rat(15), n + 2) +
         pow_int(rat(6), n + 2) - rat(6) * pow_int(rat(21), n + 2) +
         rat(5) * pow_int(rat(14), n + 2) + pow_int(rat(35), n + 2)) /
        120;
    CHECK(penta_det(roots, rat(1), n) == expected);
  }
}

TEST_CASE("penta_det reproduces the printed Case III series") {
  // Roots 2,2,3,3 with c=1: 4^{n+2} + 9^{n+2} - (n(n+4)+16) 6^{n+1}
  const auto roots = roots_of({{2, 2}, {3, 2}});
  for (std::uint64_t n = 4; n <= 15; ++n) {
    const long ln = static_cast<long>(n);
    const Rational expected = pow_int(rat(4), n + 2) + pow_int(rat(9), n + 2) -
                              rat(ln * (ln + 4) + 16) * pow_int(rat(6), n + 1);
    CHECK(penta_det(roots, rat(1), n) == expected);
  }
}

TEST_CASE("penta_det matches the fast engine on all five worked examples") {
  const std::vector<RootMultiset<Rational>> roots = {
      roots_of({{2, 1}, {3, 1}, {5, 1}, {7, 1}}),
      roots_of({{1, 2}, {2, 1}, {3, 1}}),
      roots_of({{2, 2}, {3, 2}}),
      roots_of({{2, 3}, {3, 1}}),
      roots_of({{2, 4}}),
  };
  for (int which = 1; which <= 5; ++which) {
    const auto spec = testutil::example_spec(which);
    for (std::uint64_t n = 4; n <= 12; ++n) {
      CHECK(penta_det(roots[which - 1], rat(1), n) == det(spec, n).value);
    }
  }
}

TEST_CASE("penta_det on a synthesized band with c != 1") {
  // ch_C(x) = (x-1)(x-2)(x-3)(x-4) = x^4 -10x^3 +35x^2 -50x +24, scaled by
  // c = -2: b = c*(-10), a = c*35, d = c*(-50), e = c*24.
  BandSpec<Rational> spec;
  spec.s = spec.r = 2;
  spec.coeffs = {rat(-70), rat(20), rat(-2), rat(100), rat(-48)};
  const auto roots = roots_of({{1, 1}, {2, 1}, {3, 1}, {4, 1}});
  for (std::uint64_t n = 4; n <= 10; ++n)
    CHECK(penta_det(roots, rat(-2), n) == det(spec, n).value);
}

TEST_CASE("Case I degenerates toward Case II as a root collides") {
  const Rational limit = penta_det(roots_of({{2, 2}, {3, 1}, {5, 1}}), rat(1), 6);
  Rational previous_gap;
  bool first = true;
  for (long denom : {10, 100, 1000}) {
    RootMultiset<Rational> near;
    near.roots = {{rat(2), 1}, {rat(3), 1}, {rat(5), 1}, {rat(2) + rat(1, denom), 1}};
    const Rational gap = abs(penta_det(near, rat(1), 6) - limit);
    if (!first) CHECK(gap < previous_gap);
    previous_gap = gap;
    first = false;
  }
}
