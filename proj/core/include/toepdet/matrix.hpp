#pragma once

#include <cassert>
#include <cstdint>
#include <utility>
#include <vector>

#include "toepdet/scalar.hpp"

namespace toepdet {

/// Minimal dense row-major matrix over an arbitrary field scalar. Every
/// constructor takes a witness element so prime-field values inherit their
/// modulus; there is no default-constructed scalar anywhere.
template <class S>
class Matrix {
 public:
  Matrix(int rows, int cols, const S& fill)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {
    assert(rows >= 0 && cols >= 0);
  }

  static Matrix identity(int n, const S& like) {
    Matrix m(n, n, zero_like(like));
    const S one = one_like(like);
    for (int i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  S& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const S& operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  Matrix upper_left(int size) const {
    assert(size <= rows_ && size <= cols_);
    Matrix m(size, size, zero_like(data_[0]));
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) m(i, j) = (*this)(i, j);
    return m;
  }

  Matrix transposed() const {
    Matrix m(cols_, rows_, zero_like(data_[0]));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  void swap_rows(int a, int b) {
    for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    const S zero = zero_like(a.data_[0]);
    Matrix out(a.rows_, b.cols_, zero);
    for (int i = 0; i < a.rows_; ++i) {
      for (int l = 0; l < a.cols_; ++l) {
        const S& ail = a(i, l);
        if (is_zero(ail)) continue;
        for (int j = 0; j < b.cols_; ++j) out(i, j) = out(i, j) + ail * b(l, j);
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!(a.data_[i] == b.data_[i])) return false;
    return true;
  }

 private:
  int rows_;
  int cols_;
  std::vector<S> data_;
};

}  // namespace toepdet
