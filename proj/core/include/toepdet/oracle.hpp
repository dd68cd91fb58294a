#pragma once

#include <cstdint>

#include "toepdet/bandspec.hpp"
#include "toepdet/companion.hpp"
#include "toepdet/matrix.hpp"

// Ground-truth engines, deliberately independent of the fast path: a
// fraction-free dense determinant, a pivoted float determinant, and the
// column-rotation reduction chain executed literally. Everything here is
// O(n^3)-ish by design; it exists to be right, not fast.

namespace toepdet {
namespace oracle {

/// Fraction-free (Bareiss) elimination with row pivoting on zero pivots.
/// Exact over any exact field; O(n^3).
template <class S>
S dense_det_bareiss(Matrix<S> m) {
  static_assert(scalar_traits<S>::is_exact, "Bareiss is for the exact modes");
  const int n = m.rows();
  const S one = one_like(m(0, 0));
  if (n == 0) return one;
  S prev = one;
  bool negate = false;
  for (int p = 0; p + 1 < n; ++p) {
    if (is_zero(m(p, p))) {
      int swap_row = -1;
      for (int i = p + 1; i < n; ++i) {
        if (!is_zero(m(i, p))) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return zero_like(one);  // whole column zero
      m.swap_rows(p, swap_row);
      negate = !negate;
    }
    const S pivot = m(p, p);
    for (int i = p + 1; i < n; ++i) {
      for (int j = p + 1; j < n; ++j)
        m(i, j) = (m(i, j) * pivot - m(i, p) * m(p, j)) / prev;
      m(i, p) = zero_like(one);
    }
    prev = pivot;
  }
  S det = m(n - 1, n - 1);
  return negate ? -det : det;
}

/// Partial-pivot elimination with scaled accumulation for the float mode.
/// A singular matrix yields exact zero (or a tiny value), never an error.
inline ScaledValue dense_det_lu(Matrix<ScaledValue> m) {
  const int n = m.rows();
  ScaledValue det = ScaledValue::one();
  for (int p = 0; p < n; ++p) {
    int best = p;
    for (int i = p + 1; i < n; ++i)
      if (abs_less(m(best, p), m(i, p))) best = i;
    if (m(best, p).sign == 0) return ScaledValue::zero();
    if (best != p) {
      m.swap_rows(p, best);
      det = -det;
    }
    const ScaledValue pivot = m(p, p);
    det = scaled_mul(det, pivot);
    for (int i = p + 1; i < n; ++i) {
      if (m(i, p).sign == 0) continue;
      const ScaledValue factor = scaled_div(m(i, p), pivot);
      for (int j = p + 1; j < n; ++j)
        m(i, j) = m(i, j) - scaled_mul(factor, m(p, j));
      m(i, p) = ScaledValue::zero();
    }
  }
  return det;
}

// ---------------------------------------------------------------------------
// The reduction chain. Columns 1..s of T_n rotated to the back give
//
//     P_{n,0} = [ B_n | A_0 over 0 ],   det(T_n) = (-1)^{(n-1)s} det(P_{n,0}),
//
// and each elimination step trades one row/column for a factor a_s while the
// A-block advances by A_{i+1} = C * A_i:
//
//     det(T_n) = (-1)^{(n-1)s} a_s^i det(P_{n-i,i}),   0 <= i <= n-k.
//
// Driving i to n-k and collapsing the remaining r columns the same way leaves
// the upper s x s block of A_{n-s} = C^{n-s} A_0.
// ---------------------------------------------------------------------------

/// A_0: the first k rows of the first s columns of T_n.
template <class S>
Matrix<S> build_A0(const BandSpec<S>& spec) {
  const int k = spec.k();
  Matrix<S> a0(k, spec.s, zero_like(spec.a(0)));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < spec.s; ++j) {
      const int d = j - i;
      if (d == 0)
        a0(i, j) = spec.a(0);
      else if (d > 0 && d <= spec.s)
        a0(i, j) = spec.a(d);
      else if (d < 0 && -d <= spec.r)
        a0(i, j) = spec.a(spec.s - d);
    }
  }
  return a0;
}

/// One application of F: each column x of A maps to C*x, computed by the
/// shift-and-combine form of the companion action (O(k) per column).
template <class S>
Matrix<S> apply_F(const Companion<S>& comp, const Matrix<S>& a) {
  const int k = comp.k;
  Matrix<S> out(k, a.cols(), zero_like(comp.first_col[0]));
  for (int j = 0; j < a.cols(); ++j) {
    const S& head = a(0, j);
    for (int i = 0; i + 1 < k; ++i) out(i, j) = a(i + 1, j) + head * comp.first_col[i];
    out(k - 1, j) = head * comp.first_col[k - 1];
  }
  return out;
}

/// P_{n-i,i}: left block B_{n-i} (columns s+1.. of the Toeplitz band), right
/// block A_i over zeros. Requires k <= n-i so the A-block fits.
template <class S>
Matrix<S> build_P(const BandSpec<S>& spec, std::uint64_t n, std::uint64_t i,
                  const Matrix<S>& a_block) {
  const int k = spec.k();
  const int size = static_cast<int>(n - i);
  Matrix<S> p(size, size, zero_like(spec.a(0)));
  for (int row = 0; row < size; ++row) {
    for (int col = 0; col < size - spec.s; ++col) {
      const int d = row - col;
      if (d >= 0 && d <= spec.s)
        p(row, col) = spec.a(spec.s - d);
      else if (d > spec.s && d <= k)
        p(row, col) = spec.a(d);
    }
  }
  for (int row = 0; row < k; ++row)
    for (int j = 0; j < spec.s; ++j) p(row, size - spec.s + j) = a_block(row, j);
  return p;
}

/// Step state of the chain; holds only the A-block, everything else is
/// reconstructed on demand by build_P.
template <class S>
struct ReductionState {
  std::uint64_t i = 0;
  Matrix<S> a_block;
};

template <class S>
ReductionState<S> reduction_start(const BandSpec<S>& spec) {
  return {0, build_A0(spec)};
}

template <class S>
void reduction_step(const Companion<S>& comp, ReductionState<S>& state) {
  state.a_block = apply_F(comp, state.a_block);
  ++state.i;
}

/// det(T_n) by executing the whole chain: n-s applications of F, then the
/// s x s collapse. Exact modes only; O(n k s) plus one tiny determinant.
template <class S>
S reduction_det(const BandSpec<S>& spec, std::uint64_t n) {
  validate(spec);
  if (spec.s < 1 || spec.r < 1)
    throw Error(Errc::CompanionNeedsSuperdiagonal,
                "reduction chain needs s >= 1 and r >= 1");
  const int k = spec.k();
  if (n < static_cast<std::uint64_t>(k))
    return dense_det_bareiss(dense(spec, n));
  const Companion<S> comp = build(spec);
  ReductionState<S> state = reduction_start(spec);
  for (std::uint64_t i = 0; i < n - spec.s; ++i) reduction_step(comp, state);
  const S block_det = dense_det_bareiss(state.a_block.upper_left(spec.s));
  S value = pow_int(spec.a(spec.s), n - spec.s) * block_det;
  const bool odd = ((n - 1) & 1) && (spec.s & 1);
  return odd ? -value : value;
}

}  // namespace oracle
}  // namespace toepdet
