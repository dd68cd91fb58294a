#include "toepdet/scalar.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace toepdet {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case Errc::ZeroTrailingCoefficient: return "ZeroTrailingCoefficient";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::CompanionNeedsSuperdiagonal: return "CompanionNeedsSuperdiagonal";
    case Errc::BandwidthMismatch: return "BandwidthMismatch";
    case Errc::InvalidRootMultiset: return "InvalidRootMultiset";
    case Errc::NonFiniteInput: return "NonFiniteInput";
    case Errc::ModulusNotPrime: return "ModulusNotPrime";
    case Errc::ModulusDividesLeadingCoefficient: return "ModulusDividesLeadingCoefficient";
    case Errc::ModulusDividesTrailingCoefficient: return "ModulusDividesTrailingCoefficient";
    case Errc::ModulusDividesDenominator: return "ModulusDividesDenominator";
    case Errc::ModulusMismatch: return "ModulusMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

std::string to_string(const ScalarMode& mode) {
  switch (mode.tag) {
    case ModeTag::ExactRational: return "rational";
    case ModeTag::ScaledFloat: return "float";
    case ModeTag::PrimeField: return "prime(" + std::to_string(mode.modulus) + ")";
  }
  return "?";
}

// --------------------------------------------------------------------------
// ScaledValue
// --------------------------------------------------------------------------

namespace {

// Renormalizes sign * m * 2^e with m finite and nonzero into mantissa in [1,2).
ScaledValue renorm(int sign, double m, mpz_class e) {
  int shift = 0;
  double frac = std::frexp(m, &shift);  // frac in [0.5, 1)
  return ScaledValue{sign, 2.0 * frac, std::move(e) + (shift - 1)};
}

}  // namespace

ScaledValue scaled_from(double x) {
  if (!std::isfinite(x)) throw Error(Errc::NonFiniteInput, "scaled_from requires a finite value");
  if (x == 0.0) return ScaledValue::zero();
  return renorm(x > 0 ? +1 : -1, std::fabs(x), 0);
}

ScaledValue scaled_mul(const ScaledValue& a, const ScaledValue& b) {
  if (a.sign == 0 || b.sign == 0) return ScaledValue::zero();
  double m = a.mantissa * b.mantissa;  // in [1,4)
  mpz_class e = a.exp2 + b.exp2;
  if (m >= 2.0) {
    m *= 0.5;
    e += 1;
  }
  return ScaledValue{a.sign * b.sign, m, std::move(e)};
}

ScaledValue scaled_div(const ScaledValue& a, const ScaledValue& b) {
  if (b.sign == 0) throw Error(Errc::DivisionByZero, "scaled division by zero");
  if (a.sign == 0) return ScaledValue::zero();
  double m = a.mantissa / b.mantissa;  // in (0.5, 2)
  mpz_class e = a.exp2 - b.exp2;
  if (m < 1.0) {
    m *= 2.0;
    e -= 1;
  }
  return ScaledValue{a.sign * b.sign, m, std::move(e)};
}

ScaledValue scaled_add(const ScaledValue& a, const ScaledValue& b) {
  if (a.sign == 0) return b;
  if (b.sign == 0) return a;
  const ScaledValue* hi = &a;
  const ScaledValue* lo = &b;
  if (hi->exp2 < lo->exp2) std::swap(hi, lo);
  mpz_class gap = hi->exp2 - lo->exp2;
  // Beyond 2^-64 the low addend cannot move a 53-bit mantissa.
  if (gap > 64) return *hi;
  long g = gap.get_si();
  double v = hi->sign * hi->mantissa +
             lo->sign * std::ldexp(lo->mantissa, -static_cast<int>(g));
  if (v == 0.0) return ScaledValue::zero();
  return renorm(v > 0 ? +1 : -1, std::fabs(v), hi->exp2);
}

ScaledValue scaled_pow(const ScaledValue& a, std::uint64_t n) {
  ScaledValue result = ScaledValue::one();
  ScaledValue base = a;
  while (n > 0) {
    if (n & 1) result = scaled_mul(result, base);
    if ((n >>= 1) != 0) base = scaled_mul(base, base);
  }
  return result;
}

double scaled_to_double(const ScaledValue& a) {
  if (a.sign == 0) return 0.0;
  if (!a.exp2.fits_slong_p()) return a.exp2 > 0 ? a.sign * HUGE_VAL : 0.0;
  long e = a.exp2.get_si();
  if (e > 1100) return a.sign * HUGE_VAL;
  if (e < -1100) return 0.0;
  return a.sign * std::ldexp(a.mantissa, static_cast<int>(e));
}

bool abs_less(const ScaledValue& a, const ScaledValue& b) {
  if (a.sign == 0) return b.sign != 0;
  if (b.sign == 0) return false;
  if (a.exp2 != b.exp2) return a.exp2 < b.exp2;
  return a.mantissa < b.mantissa;
}

std::string to_string(const ScaledValue& a) {
  if (a.sign == 0) return "0";
  std::ostringstream out;
  if (a.sign < 0) out << '-';
  out << a.mantissa << "*2^" << a.exp2.get_str();
  return out.str();
}

std::string to_string(const Fp& x) { return std::to_string(x.value()); }

std::string to_string(const Rational& x) { return x.get_str(); }

// --------------------------------------------------------------------------
// Prime-field plumbing
// --------------------------------------------------------------------------

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

// Deterministic Miller-Rabin; this witness set decides primality for all
// 64-bit inputs.
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

void validate_prime_modulus(std::uint64_t p) {
  if (p <= 2 || p > kMaxPrimeModulus || !is_prime_u64(p))
    throw Error(Errc::ModulusNotPrime,
                "modulus must be an odd prime below 2^63, got " + std::to_string(p));
}

// --------------------------------------------------------------------------
// Conversions
// --------------------------------------------------------------------------

ScaledValue to_scaled(const Rational& x) {
  if (sgn(x) == 0) return ScaledValue::zero();
  // mpq -> double loses range for huge values; go through num/den exponents.
  mpz_class num = abs(x.get_num());
  mpz_class den = x.get_den();
  long nexp = 0, dexp = 0;
  double nm = mpz_get_d_2exp(&nexp, num.get_mpz_t());  // in [0.5,1)
  double dm = mpz_get_d_2exp(&dexp, den.get_mpz_t());
  ScaledValue v = scaled_div(scaled_from(nm), scaled_from(dm));
  v.exp2 += mpz_class(nexp) - mpz_class(dexp);
  if (sgn(x) < 0) v.sign = -v.sign;
  return v;
}

Fp to_fp(const Rational& x, std::uint64_t p) {
  std::uint64_t den = mpz_fdiv_ui(x.get_den().get_mpz_t(), p);
  if (den == 0)
    throw Error(Errc::ModulusDividesDenominator,
                "coefficient " + x.get_str() + " has no image mod " + std::to_string(p));
  // Floor-division remainder, so negative numerators already land in [0,p).
  std::uint64_t num = mpz_fdiv_ui(x.get_num().get_mpz_t(), p);
  return Fp(num, p) * Fp(den, p).inverse();
}

}  // namespace toepdet
