#include <doctest.h>

#include <cmath>
#include <limits>

#include <toepdet/scalar.hpp>
#include <toepdet/verify.hpp>

#include "test_util.hpp"

using namespace toepdet;

TEST_CASE("scaled_from decomposes sign, mantissa, exponent") {
  CHECK(scaled_from(0.0) == ScaledValue::zero());
  CHECK(scaled_from(1.0) == ScaledValue(+1, 1.0, 0));
  CHECK(scaled_from(6.0) == ScaledValue(+1, 1.5, 2));
  CHECK(scaled_from(-0.75) == ScaledValue(-1, 1.5, -1));
  CHECK_THROWS_AS(scaled_from(std::numeric_limits<double>::infinity()), Error);
  CHECK_THROWS_AS(scaled_from(std::nan("")), Error);
}

TEST_CASE("scaled_from round-trips exactly") {
  SplitMix64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const double x = static_cast<double>(rng.range(-1'000'000, 1'000'000)) / 512.0;
    CHECK(scaled_to_double(scaled_from(x)) == x);
  }
}

TEST_CASE("scaled_mul renormalizes and honors zero/identity") {
  const ScaledValue six = scaled_from(6.0);
  CHECK(scaled_mul(six, six) == ScaledValue(+1, 1.125, 5));  // 36 = 1.125*2^5
  CHECK(scaled_mul(six, ScaledValue::zero()) == ScaledValue::zero());
  CHECK(scaled_mul(ScaledValue::zero(), six) == ScaledValue::zero());
  CHECK(scaled_mul(six, ScaledValue::one()) == six);
  CHECK(scaled_mul(ScaledValue::one(), six) == six);
}

TEST_CASE("scaled_mul matches double products within 2 ulp") {
  SplitMix64 rng(12);
  for (int i = 0; i < 500; ++i) {
    const double x = static_cast<double>(rng.range(-(1 << 20), 1 << 20)) / 64.0;
    const double y = static_cast<double>(rng.range(-(1 << 20), 1 << 20)) / 64.0;
    const double got = scaled_to_double(scaled_mul(scaled_from(x), scaled_from(y)));
    const double want = x * y;
    if (want == 0.0) {
      CHECK(got == 0.0);
    } else {
      CHECK(std::fabs(got - want) <=
            2.0 * std::numeric_limits<double>::epsilon() * std::fabs(want));
    }
  }
}

TEST_CASE("scaled_pow: powers of two, empty product, squared negative") {
  CHECK(scaled_pow(ScaledValue(+1, 1.0, 1), 10) == ScaledValue(+1, 1.0, 10));
  CHECK(scaled_pow(scaled_from(-123.25), 0) == ScaledValue::one());
  CHECK(scaled_pow(ScaledValue::zero(), 0) == ScaledValue::one());  // 0^0 := 1
  CHECK(scaled_pow(ScaledValue(-1, 1.5, 0), 2) == ScaledValue(+1, 1.125, 1));
}

TEST_CASE("scaled_pow tracks repeated multiplication to n ulp") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const double x = static_cast<double>(rng.range(-4000, 4000)) / 128.0;
    if (x == 0.0) continue;
    const ScaledValue base = scaled_from(x);
    const std::uint64_t n = static_cast<std::uint64_t>(rng.range(1, 64));
    ScaledValue slow = ScaledValue::one();
    for (std::uint64_t i = 0; i < n; ++i) slow = scaled_mul(slow, base);
    const ScaledValue fast = scaled_pow(base, n);
    const double ratio = scaled_to_double(scaled_div(fast, slow));
    CHECK(std::fabs(ratio - 1.0) <=
          static_cast<double>(n) * std::numeric_limits<double>::epsilon());
  }
}

TEST_CASE("scaled_add aligns exponents") {
  CHECK(scaled_add(scaled_from(6.0), scaled_from(10.0)) == scaled_from(16.0));
  CHECK(scaled_add(scaled_from(1.5), scaled_from(-1.5)) == ScaledValue::zero());
  // A 2^-200 perturbation cannot move a double mantissa.
  CHECK(scaled_add(ScaledValue(+1, 1.0, 200), ScaledValue::one()) ==
        ScaledValue(+1, 1.0, 200));
}

TEST_CASE("prime field arithmetic satisfies the field axioms") {
  SplitMix64 rng(14);
  for (std::uint64_t p : {5ull, 97ull, 1000000007ull, kDefaultPrimeModulus}) {
    for (int i = 0; i < 50; ++i) {
      const Fp a(rng.next(), p), b(rng.next(), p), c(rng.next(), p);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == Fp(0, p));
      if (!is_zero(a)) CHECK(a * a.inverse() == Fp(1, p));
    }
    const Fp x(123456789 % p, p);
    CHECK(x.pow(5) == x * x * x * x * x);
  }
}

TEST_CASE("prime field rejects cross-modulus arithmetic") {
  const Fp a(3, 97), b(3, 101);
  CHECK_THROWS_AS((void)(a + b), Error);
  CHECK_THROWS_AS((void)(a * b), Error);
  try {
    (void)(a * b);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ModulusMismatch);
  }
}

TEST_CASE("modulus validation") {
  validate_prime_modulus(kDefaultPrimeModulus);
  validate_prime_modulus(5);
  CHECK_THROWS_AS(validate_prime_modulus(2), Error);
  CHECK_THROWS_AS(validate_prime_modulus(1), Error);
  CHECK_THROWS_AS(validate_prime_modulus(9), Error);
  CHECK_THROWS_AS(validate_prime_modulus(561), Error);  // Carmichael
  CHECK_THROWS_AS(validate_prime_modulus(0xffffffffffffffffull), Error);
}

TEST_CASE("is_prime_u64 spot checks") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK(is_prime_u64(97));
  CHECK(is_prime_u64(kDefaultPrimeModulus));
  CHECK_FALSE(is_prime_u64(0));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(4));
  CHECK_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to 2,3,5,7
}

TEST_CASE("rational to prime-field conversion") {
  CHECK(to_fp(testutil::rat(7, 3), 11) == Fp(6, 11));  // 7 * 3^-1 = 7*4 = 28 = 6
  CHECK(to_fp(testutil::rat(-1), 11) == Fp(10, 11));
  CHECK_THROWS_AS(to_fp(testutil::rat(1, 11), 11), Error);
}

TEST_CASE("rational to scaled conversion survives huge magnitudes") {
  CHECK(to_scaled(testutil::rat(6)) == ScaledValue(+1, 1.5, 2));
  CHECK(to_scaled(testutil::rat(1, 2)) == ScaledValue(+1, 1.0, -1));
  CHECK(to_scaled(testutil::rat(-3, 4)) == ScaledValue(-1, 1.5, -1));
  Rational huge = toepdet::pow_int(Rational(2), 400);
  CHECK(to_scaled(huge) == ScaledValue(+1, 1.0, 400));
}

TEST_CASE("pow_int on rationals") {
  CHECK(pow_int(testutil::rat(2), 10) == testutil::rat(1024));
  CHECK(pow_int(testutil::rat(-3, 2), 3) == testutil::rat(-27, 8));
  CHECK(pow_int(testutil::rat(5), 0) == testutil::rat(1));
}
