#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <type_traits>

#include <gmpxx.h>

#include "toepdet/errors.hpp"

namespace toepdet {

// ---------------------------------------------------------------------------
// Scalar modes
//
// Every computation runs in exactly one of three fields:
//   rational  — exact arbitrary-precision rationals (GMP mpq)
//   float     — ScaledValue, a sign/mantissa/base-2-exponent triple that
//               survives the geometric growth of determinant values
//   prime     — Z/pZ for a machine-word prime p
// Scalars of different modes (or different moduli) never mix; generic code is
// templated on the scalar type, so mixing is rejected at compile time for the
// mode and at run time for the modulus.
// ---------------------------------------------------------------------------

enum class ModeTag { ExactRational, ScaledFloat, PrimeField };

struct ScalarMode {
  ModeTag tag = ModeTag::ExactRational;
  std::uint64_t modulus = 0;  // meaningful iff tag == PrimeField

  friend bool operator==(const ScalarMode&, const ScalarMode&) = default;
};

std::string to_string(const ScalarMode& mode);

using Rational = mpq_class;

// ---------------------------------------------------------------------------
// ScaledValue: value = sign * mantissa * 2^exp2, mantissa in [1,2) or exactly 0.
// The exponent is an arbitrary-width integer, so products like a_s^n never
// overflow no matter how large n gets.
// ---------------------------------------------------------------------------

struct ScaledValue {
  int sign = 0;           // -1, 0, +1; 0 iff mantissa == 0
  double mantissa = 0.0;  // in [1,2) or 0
  mpz_class exp2{0};

  ScaledValue() = default;
  ScaledValue(int sg, double mant, mpz_class e)
      : sign(sg), mantissa(mant), exp2(std::move(e)) {}

  static ScaledValue zero() { return {}; }
  static ScaledValue one() { return {+1, 1.0, 0}; }

  friend bool operator==(const ScaledValue& a, const ScaledValue& b) {
    return a.sign == b.sign && a.mantissa == b.mantissa && a.exp2 == b.exp2;
  }
};

ScaledValue scaled_from(double x);  // throws Error(NonFiniteInput) on NaN/inf
ScaledValue scaled_mul(const ScaledValue& a, const ScaledValue& b);
ScaledValue scaled_add(const ScaledValue& a, const ScaledValue& b);
ScaledValue scaled_div(const ScaledValue& a, const ScaledValue& b);
ScaledValue scaled_pow(const ScaledValue& a, std::uint64_t n);  // 0^0 == 1
double scaled_to_double(const ScaledValue& a);  // may under/overflow to 0/inf
std::string to_string(const ScaledValue& a);    // "1.5*2^10"

inline ScaledValue operator*(const ScaledValue& a, const ScaledValue& b) { return scaled_mul(a, b); }
inline ScaledValue operator+(const ScaledValue& a, const ScaledValue& b) { return scaled_add(a, b); }
inline ScaledValue operator-(const ScaledValue& a) {
  return {-a.sign, a.mantissa, a.exp2};
}
inline ScaledValue operator-(const ScaledValue& a, const ScaledValue& b) { return scaled_add(a, -b); }
inline ScaledValue operator/(const ScaledValue& a, const ScaledValue& b) { return scaled_div(a, b); }

/// |a| < |b|; used for pivot selection.
bool abs_less(const ScaledValue& a, const ScaledValue& b);

// ---------------------------------------------------------------------------
// Fp: the field Z/pZ for an odd machine-word prime p < 2^63.
// Each value carries its modulus; operations on mismatched moduli throw.
// ---------------------------------------------------------------------------

inline constexpr std::uint64_t kMaxPrimeModulus = (std::uint64_t{1} << 63) - 1;
inline constexpr std::uint64_t kDefaultPrimeModulus = 2305843009213693951ull;  // 2^61 - 1

bool is_prime_u64(std::uint64_t n);

/// Throws Error(ModulusNotPrime) unless 2 < p <= kMaxPrimeModulus and p prime.
void validate_prime_modulus(std::uint64_t p);

class Fp {
 public:
  Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

  static Fp from_int(std::int64_t x, std::uint64_t p) {
    std::uint64_t m = static_cast<std::uint64_t>(x < 0 ? -(x + 1) : x) % p;
    if (x < 0) m = p - 1 - m;  // maps -1 -> p-1 without signed overflow
    return Fp(m, p);
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    a.check_same(b);
    std::uint64_t s = a.v_ + b.v_;
    if (s >= a.p_) s -= a.p_;
    return Fp(s, a.p_, unchecked{});
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    a.check_same(b);
    return Fp(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_, unchecked{});
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    a.check_same(b);
    return Fp(static_cast<std::uint64_t>(
                  (static_cast<unsigned __int128>(a.v_) * b.v_) % a.p_),
              a.p_, unchecked{});
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_, unchecked{}); }

  friend bool operator==(const Fp& a, const Fp& b) {
    a.check_same(b);
    return a.v_ == b.v_;
  }

  Fp pow(std::uint64_t e) const {
    Fp result(1, p_, unchecked{});
    Fp base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  /// x^(p-2); branch-free inversion in the field.
  Fp inverse() const {
    if (v_ == 0) throw Error(Errc::DivisionByZero, "inverse of 0 in F_p");
    return pow(p_ - 2);
  }

 private:
  struct unchecked {};
  Fp(std::uint64_t v, std::uint64_t p, unchecked) : v_(v), p_(p) {}

  void check_same(const Fp& o) const {
    if (p_ != o.p_)
      throw Error(Errc::ModulusMismatch, "operands live in different prime fields");
  }

  std::uint64_t v_;
  std::uint64_t p_;
};

std::string to_string(const Fp& x);
std::string to_string(const Rational& x);

// ---------------------------------------------------------------------------
// Uniform hooks generic code relies on. New values are always derived from a
// witness of the right field ("like"), never conjured, so a prime-field
// element always knows its modulus.
// ---------------------------------------------------------------------------

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational from_int_like(std::int64_t v, const Rational&) {
  return Rational(mpz_class(static_cast<long>(v)));
}
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline ScaledValue zero_like(const ScaledValue&) { return ScaledValue::zero(); }
inline ScaledValue one_like(const ScaledValue&) { return ScaledValue::one(); }
inline ScaledValue from_int_like(std::int64_t v, const ScaledValue&) {
  return scaled_from(static_cast<double>(v));
}
inline bool is_zero(const ScaledValue& x) { return x.sign == 0; }

inline Fp zero_like(const Fp& like) { return Fp(0, like.modulus()); }
inline Fp one_like(const Fp& like) { return Fp(1, like.modulus()); }
inline Fp from_int_like(std::int64_t v, const Fp& like) {
  return Fp::from_int(v, like.modulus());
}
inline bool is_zero(const Fp& x) { return x.value() == 0; }

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool is_exact = true;
  static ScalarMode mode(const Rational&) { return {ModeTag::ExactRational, 0}; }
};
template <>
struct scalar_traits<ScaledValue> {
  static constexpr bool is_exact = false;
  static ScalarMode mode(const ScaledValue&) { return {ModeTag::ScaledFloat, 0}; }
};
template <>
struct scalar_traits<Fp> {
  static constexpr bool is_exact = true;
  static ScalarMode mode(const Fp& x) { return {ModeTag::PrimeField, x.modulus()}; }
};

template <class S>
ScalarMode mode_of(const S& x) {
  return scalar_traits<S>::mode(x);
}

/// Binary powering on any field scalar; the same square-and-multiply schedule
/// the matrix and polynomial paths use. 0^0 == 1 by the empty-product rule.
template <class S>
S pow_int(const S& base, std::uint64_t n) {
  S result = one_like(base);
  S b = base;
  while (n > 0) {
    if (n & 1) result = result * b;
    if ((n >>= 1) != 0) b = b * b;
  }
  return result;
}

template <>
inline ScaledValue pow_int<ScaledValue>(const ScaledValue& base, std::uint64_t n) {
  return scaled_pow(base, n);
}

// Mode conversions out of the canonical rational representation.
ScaledValue to_scaled(const Rational& x);
Fp to_fp(const Rational& x, std::uint64_t p);  // throws when p divides den(x)

}  // namespace toepdet
