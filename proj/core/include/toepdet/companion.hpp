#pragma once

#include <vector>

#include "toepdet/bandspec.hpp"
#include "toepdet/matrix.hpp"

namespace toepdet {

// ---------------------------------------------------------------------------
// The k x k companion matrix C of a band spec:
//
//     C = | -a_{s-1}/a_s                    |
//         |     ...                         |
//         | -a_1/a_s       I_{(k-1)x(k-1)}  |
//         | -a_0/a_s                        |
//         | -a_{s+1}/a_s                    |
//         |     ...                         |
//         | -a_{s+r}/a_s   0   ...   0      |
//
// Only the first column is stored; columns 2..k are unit shift columns.
// ---------------------------------------------------------------------------

template <class S>
struct Companion {
  int k = 0;
  std::vector<S> first_col;  // row-ordered as in the display above
};

/// Monic characteristic polynomial ch_C(x) = x^k + c[k-1] x^{k-1} + ... + c[0].
/// c[0] = a_{s+r}/a_s is nonzero, so C is invertible.
template <class S>
struct CharPoly {
  std::vector<S> c;
  int k() const { return static_cast<int>(c.size()); }
};

template <class S>
Companion<S> build(const BandSpec<S>& spec) {
  validate(spec);
  if (spec.s < 1)
    throw Error(Errc::CompanionNeedsSuperdiagonal,
                "s = 0 band is triangular; use the direct a_0^n path");
  const S& as = spec.a(spec.s);
  Companion<S> comp;
  comp.k = spec.k();
  comp.first_col.reserve(comp.k);
  for (int i = spec.s - 1; i >= 0; --i) comp.first_col.push_back(-(spec.a(i) / as));
  for (int j = 1; j <= spec.r; ++j) comp.first_col.push_back(-(spec.a(spec.s + j) / as));
  return comp;
}

/// The first column determines ch_C: row i of the column is -c[k-1-i].
template <class S>
CharPoly<S> charpoly_of(const Companion<S>& comp) {
  CharPoly<S> chi;
  chi.c.reserve(comp.k);
  for (int j = 0; j < comp.k; ++j) chi.c.push_back(-comp.first_col[comp.k - 1 - j]);
  return chi;
}

template <class S>
CharPoly<S> charpoly(const BandSpec<S>& spec) {
  return charpoly_of(build(spec));
}

template <class S>
Matrix<S> dense_companion(const Companion<S>& comp) {
  Matrix<S> m(comp.k, comp.k, zero_like(comp.first_col[0]));
  const S one = one_like(comp.first_col[0]);
  for (int i = 0; i < comp.k; ++i) m(i, 0) = comp.first_col[i];
  for (int i = 0; i + 1 < comp.k; ++i) m(i, i + 1) = one;
  return m;
}

/// Band of T_n - lambda*I: the same spec with a_0 replaced by a_0 - lambda.
template <class S>
BandSpec<S> shift_lambda(const BandSpec<S>& spec, const S& lambda) {
  BandSpec<S> out = spec;
  out.coeffs[0] = spec.a(0) - lambda;
  return out;
}

}  // namespace toepdet
