#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toepdet/errors.hpp"
#include "toepdet/matrix.hpp"
#include "toepdet/scalar.hpp"

namespace toepdet {

// ---------------------------------------------------------------------------
// A banded Toeplitz family T_n: s superdiagonals, r subdiagonals, bandwidth
// k = r + s. The coefficient vector is ordered
//
//     coeffs = [ a_0, a_1 .. a_s, a_{s+1} .. a_{s+r} ]
//                diag  super (outward)  sub (outward)
//
// so that T_n looks like (tridiagonal s = r = 1 shown):
//
//         | a_0  a_1       0  |
//         | a_2  a_0  a_1     |         a_1..a_s     above the diagonal,
//         |      a_2  a_0  ...|         a_{s+1}..a_{s+r} below it.
//         |  0        ...  ...|
//
// This ordering is the single biggest implementation trap in the whole
// artifact; dense() below is the executable definition.
// ---------------------------------------------------------------------------

template <class S>
struct BandSpec {
  int s = 0;              // superdiagonal count
  int r = 0;              // subdiagonal count
  std::vector<S> coeffs;  // size s + r + 1

  int k() const { return s + r; }
  const S& a(int i) const { return coeffs[static_cast<std::size_t>(i)]; }

  friend bool operator==(const BandSpec& x, const BandSpec& y) {
    if (x.s != y.s || x.r != y.r || x.coeffs.size() != y.coeffs.size()) return false;
    for (std::size_t i = 0; i < x.coeffs.size(); ++i)
      if (!(x.coeffs[i] == y.coeffs[i])) return false;
    return true;
  }
};

/// Checks the band invariants: coeffs has length k+1, a_s != 0, a_{s+r} != 0.
/// Returns the spec unchanged so call sites can validate inline.
template <class S>
const BandSpec<S>& validate(const BandSpec<S>& spec) {
  if (spec.s < 0 || spec.r < 0 ||
      spec.coeffs.size() != static_cast<std::size_t>(spec.k() + 1))
    throw Error(Errc::LengthMismatch,
                "need " + std::to_string(spec.k() + 1) + " coefficients, got " +
                    std::to_string(spec.coeffs.size()));
  if (is_zero(spec.a(spec.s)))
    throw Error(Errc::ZeroLeadingCoefficient, "a_s (outermost superdiagonal) must be nonzero");
  if (is_zero(spec.a(spec.k())))
    throw Error(Errc::ZeroTrailingCoefficient, "a_{s+r} (outermost subdiagonal) must be nonzero");
  return spec;
}

/// Band of T_n^t: swaps the super- and subdiagonal blocks (and s with r).
/// det(T_n) is invariant under this.
template <class S>
BandSpec<S> transpose(const BandSpec<S>& spec) {
  BandSpec<S> out;
  out.s = spec.r;
  out.r = spec.s;
  out.coeffs.reserve(spec.coeffs.size());
  out.coeffs.push_back(spec.a(0));
  for (int j = 1; j <= spec.r; ++j) out.coeffs.push_back(spec.a(spec.s + j));
  for (int i = 1; i <= spec.s; ++i) out.coeffs.push_back(spec.a(i));
  return out;
}

/// Materializes the n x n instance. Entry (i,j) is a_{j-i} above the diagonal,
/// a_0 on it, a_{s+(i-j)} below it, zero outside the band.
template <class S>
Matrix<S> dense(const BandSpec<S>& spec, std::uint64_t n) {
  const int size = static_cast<int>(n);
  Matrix<S> m(size, size, zero_like(spec.a(0)));
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      const int d = j - i;
      if (d == 0)
        m(i, j) = spec.a(0);
      else if (d > 0 && d <= spec.s)
        m(i, j) = spec.a(d);
      else if (d < 0 && -d <= spec.r)
        m(i, j) = spec.a(spec.s - d);
    }
  }
  return m;
}

// Canonical-form (exact rational) parsing and JSON interchange. The wire
// format is {"s": int, "r": int, "coeffs": ["2", "-7/2", ...]} with exact
// integer or p/q coefficient strings.
Rational parse_rational(const std::string& text);  // throws Error(ParseError)
BandSpec<Rational> spec_from_json(const std::string& json_text);
std::string spec_to_json(const BandSpec<Rational>& spec);

// Rebases a canonical rational spec into the other two scalar modes.
BandSpec<ScaledValue> spec_to_scaled(const BandSpec<Rational>& spec);
BandSpec<Fp> spec_to_fp(const BandSpec<Rational>& spec, std::uint64_t p);

}  // namespace toepdet
