#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "toepdet/companion.hpp"
#include "toepdet/matrix.hpp"

namespace toepdet {

/// Per-call instrumentation; mul_count is the number of (matrix or
/// polynomial) multiplications performed by a powering call.
struct PowStats {
  std::uint64_t mul_count = 0;
};

enum class Strategy { Auto, Dense, PolyMod };

/// x^N reduced modulo ch_C; degree < k. Carries N for audit.
template <class S>
struct PolyResidue {
  std::vector<S> coeffs;
  std::uint64_t exponent = 0;
};

/// M^n by binary powering: M^n = M^{n/2} M^{n/2} (n even), M * M^{n-1} (n odd).
/// n = 0 gives the identity. At most 2*log2(n) multiplications.
template <class S>
Matrix<S> dense_pow(const Matrix<S>& m, std::uint64_t n, PowStats* stats = nullptr) {
  assert(m.rows() == m.cols() && m.rows() > 0);
  if (n == 0) return Matrix<S>::identity(m.rows(), m(0, 0));
  Matrix<S> acc = m;
  const int top = std::bit_width(n) - 1;
  for (int bit = top - 1; bit >= 0; --bit) {
    acc = acc * acc;
    if (stats) ++stats->mul_count;
    if ((n >> bit) & 1) {
      acc = acc * m;
      if (stats) ++stats->mul_count;
    }
  }
  return acc;
}

namespace detail {

/// In-place residue *= x modulo the monic chi; O(k).
template <class S>
void mul_by_x_mod(const CharPoly<S>& chi, std::vector<S>& res) {
  const int k = chi.k();
  S top = res[k - 1];
  for (int j = k - 1; j >= 1; --j) res[j] = res[j - 1] - top * chi.c[j];
  res[0] = -(top * chi.c[0]);
}

/// Schoolbook product of two degree-<k residues followed by reduction.
template <class S>
std::vector<S> mul_mod(const CharPoly<S>& chi, const std::vector<S>& a,
                       const std::vector<S>& b) {
  const int k = chi.k();
  const S zero = zero_like(chi.c[0]);
  std::vector<S> prod(static_cast<std::size_t>(2 * k - 1), zero);
  for (int i = 0; i < k; ++i) {
    if (is_zero(a[i])) continue;
    for (int j = 0; j < k; ++j) prod[i + j] = prod[i + j] + a[i] * b[j];
  }
  for (int d = 2 * k - 2; d >= k; --d) {
    if (is_zero(prod[d])) continue;
    const S t = prod[d];
    for (int j = 0; j < k; ++j) prod[d - k + j] = prod[d - k + j] - t * chi.c[j];
  }
  prod.resize(static_cast<std::size_t>(k));
  return prod;
}

}  // namespace detail

/// x^n mod ch_C by square-and-multiply over the exponent bits,
/// most-significant first. O(log n) squarings of O(k^2) each.
template <class S>
PolyResidue<S> polymod_pow(const CharPoly<S>& chi, std::uint64_t n,
                           PowStats* stats = nullptr) {
  const int k = chi.k();
  const S zero = zero_like(chi.c[0]);
  const S one = one_like(chi.c[0]);
  PolyResidue<S> res{std::vector<S>(static_cast<std::size_t>(k), zero), n};
  if (n == 0) {
    res.coeffs[0] = one;
    return res;
  }
  if (k == 1) {
    // x == -c0 in the quotient ring; everything is scalar powering.
    const S base = -chi.c[0];
    res.coeffs[0] = pow_int(base, n);
    return res;
  }
  res.coeffs[1] = one;  // x^1; the leading exponent bit
  const int top = std::bit_width(n) - 1;
  for (int bit = top - 1; bit >= 0; --bit) {
    res.coeffs = detail::mul_mod(chi, res.coeffs, res.coeffs);
    if (stats) ++stats->mul_count;
    if ((n >> bit) & 1) {
      detail::mul_by_x_mod(chi, res.coeffs);
      if (stats) ++stats->mul_count;
    }
  }
  return res;
}

/// Upper-left s x s block of C^n rebuilt from the residue x^n mod ch_C:
/// entry (l,m), 1-based, is the coefficient of x^{k-l} in x^{n+k-m} mod ch_C.
/// Costs k-1 multiply-by-x steps on top of the residue.
template <class S>
Matrix<S> block_from_residue(const CharPoly<S>& chi, const PolyResidue<S>& base, int s) {
  const int k = chi.k();
  std::vector<std::vector<S>> ladder;
  ladder.reserve(static_cast<std::size_t>(k));
  ladder.push_back(base.coeffs);
  for (int step = 1; step < k; ++step) {
    ladder.push_back(ladder.back());
    detail::mul_by_x_mod(chi, ladder.back());
  }
  Matrix<S> m(s, s, zero_like(chi.c[0]));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) m(i, j) = ladder[static_cast<std::size_t>(k - 1 - j)][k - 1 - i];
  return m;
}

/// Full C^n from the residue; the k = s special case of block_from_residue.
template <class S>
Matrix<S> power_from_residue(const CharPoly<S>& chi, const PolyResidue<S>& base) {
  return block_from_residue(chi, base, chi.k());
}

inline Strategy resolve_strategy(Strategy strategy, std::uint64_t n, int k) {
  if (strategy != Strategy::Auto) return strategy;
  // Crossover is a tunable constant, not a claim; PolyMod wins once the
  // k x k matrix products stop being tiny relative to the poly ops.
  return n >= 4 * static_cast<std::uint64_t>(k) ? Strategy::PolyMod : Strategy::Dense;
}

/// Upper-left s x s block of C^n by either strategy. The two agree exactly in
/// the exact modes; that equality is one of the standing test invariants.
template <class S>
Matrix<S> upper_left_block(const Companion<S>& comp, std::uint64_t n, int s,
                           Strategy strategy = Strategy::Auto, PowStats* stats = nullptr) {
  if (resolve_strategy(strategy, n, comp.k) == Strategy::PolyMod) {
    const CharPoly<S> chi = charpoly_of(comp);
    return block_from_residue(chi, polymod_pow(chi, n, stats), s);
  }
  return dense_pow(dense_companion(comp), n, stats).upper_left(s);
}

}  // namespace toepdet
