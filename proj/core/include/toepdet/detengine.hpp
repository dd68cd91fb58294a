#pragma once

#include <cstdint>
#include <string>

#include "toepdet/bandspec.hpp"
#include "toepdet/companion.hpp"
#include "toepdet/matpow.hpp"
#include "toepdet/oracle.hpp"

namespace toepdet {

enum class DetPath {
  FastPolyMod,      // n >= k, block via x^n mod ch_C
  FastDense,        // n >= k, block via dense binary powering
  DenseOracle,      // n < k fallback: dense elimination
  ReductionOracle,  // column-rotation chain (verification engine)
  ClosedForm,       // tridiagonal / pentadiagonal closed form
  Triangular,       // s = 0 or r = 0: det = a_0^n
};

inline const char* det_path_name(DetPath path) {
  switch (path) {
    case DetPath::FastPolyMod: return "FastPolyMod";
    case DetPath::FastDense: return "FastDense";
    case DetPath::DenseOracle: return "DenseOracle";
    case DetPath::ReductionOracle: return "ReductionOracle";
    case DetPath::ClosedForm: return "ClosedForm";
    case DetPath::Triangular: return "Triangular";
  }
  return "?";
}

template <class S>
struct DetResult {
  S value;
  std::uint64_t n = 0;
  DetPath path = DetPath::DenseOracle;
  ScalarMode mode;
};

/// det of an s x s block: fraction-free Bareiss in the exact modes,
/// partial-pivot elimination in float mode. O(s^3).
template <class S>
S small_det(const Matrix<S>& block) {
  if constexpr (scalar_traits<S>::is_exact)
    return oracle::dense_det_bareiss(block);
  else
    return oracle::dense_det_lu(block);
}

namespace detail {

// Dispatch on a spec already known to be valid. Shift handling enters here so
// the triangular path can evaluate (a_0 - lambda)^n even when the shift lands
// exactly on the eigenvalue (where the shifted spec would fail validate()).
template <class S>
DetResult<S> det_validated(const BandSpec<S>& spec, std::uint64_t n,
                           Strategy strategy, PowStats* stats) {
  const ScalarMode mode = mode_of(spec.a(0));
  if (spec.s == 0 || spec.r == 0)
    return {pow_int(spec.a(0), n), n, DetPath::Triangular, mode};

  // Normalize so the final block is min(s,r) x min(s,r); det is transpose-
  // invariant, and the sign factor below uses the normalized s.
  const BandSpec<S> w = spec.s > spec.r ? transpose(spec) : spec;
  const int k = w.k();

  if (n < static_cast<std::uint64_t>(k)) {
    S value = [&] {
      if constexpr (scalar_traits<S>::is_exact)
        return oracle::dense_det_bareiss(dense(w, n));
      else
        return oracle::dense_det_lu(dense(w, n));
    }();
    return {std::move(value), n, DetPath::DenseOracle, mode};
  }

  const Companion<S> comp = build(w);
  const Strategy chosen = resolve_strategy(strategy, n, k);
  const Matrix<S> block = upper_left_block(comp, n, w.s, chosen, stats);
  S value = pow_int(w.a(w.s), n) * small_det(block);
  if ((n & 1) && (w.s & 1)) value = -value;  // (-1)^{n s}
  return {std::move(value), n,
          chosen == Strategy::PolyMod ? DetPath::FastPolyMod : DetPath::FastDense, mode};
}

}  // namespace detail

/// det(T_n) = (-1)^{n s} a_s^n det(M) with M the upper-left s x s block of
/// C^n, for n >= k; smaller n falls back to the dense oracle.
template <class S>
DetResult<S> det(const BandSpec<S>& spec, std::uint64_t n,
                 Strategy strategy = Strategy::Auto, PowStats* stats = nullptr) {
  validate(spec);
  return detail::det_validated(spec, n, strategy, stats);
}

/// det(T_n - lambda*I): identical machinery on the spec with a_0 - lambda.
template <class S>
DetResult<S> det_shifted(const BandSpec<S>& spec, std::uint64_t n, const S& lambda,
                         Strategy strategy = Strategy::Auto, PowStats* stats = nullptr) {
  validate(spec);
  return detail::det_validated(shift_lambda(spec, lambda), n, strategy, stats);
}

}  // namespace toepdet
