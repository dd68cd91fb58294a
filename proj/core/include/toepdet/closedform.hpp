#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "toepdet/detengine.hpp"
#include "toepdet/matpow.hpp"

// Closed-form determinant evaluators that take the eigenvalues of the
// companion matrix as input. Root finding is out of scope here: callers
// supply the roots, these functions evaluate the formulas.

namespace toepdet {

/// Lucas sequence of the first kind: U_0 = 0, U_1 = 1,
/// U_{n+2} = P U_{n+1} - Q U_n. Evaluated in O(log n) via the 2x2 power
///   [[P, -Q], [1, 0]]^n = [[U_{n+1}, -Q U_n], [U_n, -Q U_{n-1}]].
template <class S>
S lucas_U(const S& p, const S& q, std::uint64_t n) {
  if (n == 0) return zero_like(p);
  Matrix<S> m(2, 2, zero_like(p));
  m(0, 0) = p;
  m(0, 1) = -q;
  m(1, 0) = one_like(p);
  return dense_pow(m, n)(1, 0);
}

/// Tridiagonal closed form: for the band {a; b; c} (s = r = 1),
/// det(T_n) = (-1)^n b^n U_{n+1}(-a/b, c/b).
template <class S>
S tridiag_det(const BandSpec<S>& spec, std::uint64_t n) {
  validate(spec);
  if (spec.s != 1 || spec.r != 1)
    throw Error(Errc::BandwidthMismatch, "tridiagonal closed form needs s = r = 1");
  const S& a = spec.a(0);
  const S& b = spec.a(1);
  const S& c = spec.a(2);
  const S p = -(a / b);
  const S q = c / b;
  S value = pow_int(b, n) * lucas_U(p, q, n + 1);
  return (n & 1) ? -value : value;
}

// ---------------------------------------------------------------------------
// Pentadiagonal closed forms (k = 4). The multiplicity pattern of the four
// companion eigenvalues selects one of five formulas.
// ---------------------------------------------------------------------------

/// Eigenvalues with multiplicities; multiplicities must sum to 4 in the
/// pentadiagonal evaluator and roots must be pairwise distinct.
template <class S>
struct RootMultiset {
  std::vector<std::pair<S, int>> roots;
};

enum class PentaCase { I, II, III, IV, V };

inline const char* penta_case_name(PentaCase c) {
  switch (c) {
    case PentaCase::I: return "I";
    case PentaCase::II: return "II";
    case PentaCase::III: return "III";
    case PentaCase::IV: return "IV";
    case PentaCase::V: return "V";
  }
  return "?";
}

template <class S>
PentaCase penta_case_of(const RootMultiset<S>& roots) {
  int total = 0;
  std::vector<int> mults;
  for (const auto& [root, mult] : roots.roots) {
    if (mult <= 0) throw Error(Errc::InvalidRootMultiset, "multiplicity must be positive");
    total += mult;
    mults.push_back(mult);
  }
  if (total != 4)
    throw Error(Errc::InvalidRootMultiset, "multiplicities must sum to 4");
  for (std::size_t i = 0; i < roots.roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.roots.size(); ++j)
      if (roots.roots[i].first == roots.roots[j].first)
        throw Error(Errc::InvalidRootMultiset, "roots must be pairwise distinct");
  std::sort(mults.begin(), mults.end(), std::greater<int>());
  if (mults == std::vector<int>{1, 1, 1, 1}) return PentaCase::I;
  if (mults == std::vector<int>{2, 1, 1}) return PentaCase::II;
  if (mults == std::vector<int>{2, 2}) return PentaCase::III;
  if (mults == std::vector<int>{3, 1}) return PentaCase::IV;
  return PentaCase::V;  // {4}
}

namespace detail {

template <class S>
std::vector<S> roots_by_multiplicity(const RootMultiset<S>& roots) {
  std::vector<std::pair<S, int>> sorted = roots.roots;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& x, const auto& y) { return x.second > y.second; });
  std::vector<S> out;
  for (const auto& [root, mult] : sorted) out.push_back(root);
  return out;
}

}  // namespace detail

/// det(T_n) = c^n E/D for the pentadiagonal band whose ch_C has the given
/// roots; c is the outermost-superdiagonal coefficient a_s. Exact arithmetic
/// only: the Case I-IV denominators cancel catastrophically in floating
/// point as roots collide. Valid for n >= 4.
template <class S>
S penta_det(const RootMultiset<S>& roots, const S& c, std::uint64_t n) {
  const PentaCase which = penta_case_of(roots);
  const std::vector<S> lam = detail::roots_by_multiplicity(roots);
  const S one = one_like(c);
  const S cn = pow_int(c, n);
  const S nn = from_int_like(static_cast<std::int64_t>(n), c);
  auto k = [&](std::int64_t v) { return from_int_like(v, c); };
  auto pw = [&](const S& x, std::uint64_t e) { return pow_int(x, e); };

  switch (which) {
    case PentaCase::I: {
      const S &l1 = lam[0], &l2 = lam[1], &l3 = lam[2], &l4 = lam[3];
      const S e = (l2 - l3) * (l1 - l4) * (pw(l2 * l3, n + 2) + pw(l1 * l4, n + 2)) -
                  (l1 - l3) * (l2 - l4) * (pw(l1 * l3, n + 2) + pw(l2 * l4, n + 2)) +
                  (l1 - l2) * (l3 - l4) * (pw(l1 * l2, n + 2) + pw(l3 * l4, n + 2));
      const S d = (l1 - l2) * (l1 - l3) * (l1 - l4) * (l2 - l3) * (l2 - l4) * (l3 - l4);
      return cn * (e / d);
    }
    case PentaCase::II: {
      const S &l1 = lam[0], &l2 = lam[1], &l3 = lam[2];
      const S e =
          pw(l1, n + 1) *
              (pw(l1, n + 3) * (l2 - l3) +
               pw(l2, n + 2) * (l1 * (-(k(2) + nn) * l1 + l2 + nn * l2) +
                                ((k(3) + nn) * l1 - (k(2) + nn) * l2) * l3)) +
          pw(l3, n + 2) *
              (pw(l2, n + 2) * (l2 - l3) +
               pw(l1, n + 1) * ((k(2) + nn) * l1 * l1 + (k(2) + nn) * l2 * l3 -
                                l1 * ((k(3) + nn) * l2 + l3 + nn * l3)));
      const S d12 = l1 - l2;
      const S d13 = l1 - l3;
      const S d = d12 * d12 * d13 * d13 * (l2 - l3);
      return cn * (e / d);
    }
    case PentaCase::III: {
      const S &l1 = lam[0], &l2 = lam[1];
      const S n2 = k(2) + nn;  // n + 2
      // lambda^{2n+4} computed as (lambda^2)^{n+2}; 2n would wrap uint64.
      const S e = pw(l1 * l1, n + 2) -
                  n2 * n2 * pw(l1 * l2, n + 1) * (l1 * l1 + l2 * l2) +
                  k(2) * (k(3) + k(4) * nn + nn * nn) * pw(l1 * l2, n + 2) +
                  pw(l2 * l2, n + 2);
      const S diff = l1 - l2;
      const S d = diff * diff * diff * diff;
      return cn * (e / d);
    }
    case PentaCase::IV: {
      const S &l1 = lam[0], &l2 = lam[1];
      const S e = (k(2) + nn) * pw(l1, n) *
                  ((one + nn) * (pw(l1, n + 3) - pw(l2, n + 3)) -
                   (k(3) + nn) * pw(l1, n + 2) * l2 + (k(3) + nn) * l1 * pw(l2, n + 2));
      const S diff = l1 - l2;
      const S d = k(2) * diff * diff * diff;
      return cn * (e / d);
    }
    case PentaCase::V: {
      const S& l1 = lam[0];
      return cn * (nn + k(3)) * (nn + k(2)) * (nn + k(2)) * (nn + one) *
             pw(l1 * l1, n) / k(12);
    }
  }
  throw Error(Errc::InvalidRootMultiset, "unreachable");
}

}  // namespace toepdet
