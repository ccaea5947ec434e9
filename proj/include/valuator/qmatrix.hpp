#pragma once

#include <cstddef>
#include <vector>

#include "valuator/rat.hpp"

namespace valuator {

// Dense exact-rational matrix.  All eliminations are performed over Q with
// GMP-backed arithmetic, so every reported rank, kernel and determinant is
// exact.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Rat(0)) {}

  static QMatrix identity(int n);
  // rows-major initializer; every inner vector must have the same length.
  static QMatrix from_rows(const std::vector<Vec>& rows);
  static QMatrix from_cols(const std::vector<Vec>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  Vec row(int i) const;
  Vec col(int j) const;

  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  bool operator==(const QMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  QMatrix transpose() const;
  bool is_zero() const;

  // Horizontal concatenation [this | o].
  QMatrix hcat(const QMatrix& o) const;

  int rank() const;

  // Basis of the right kernel {x : A x = 0}; each entry is a column vector of
  // length cols().  rank() + kernel_basis().size() == cols().
  std::vector<Vec> kernel_basis() const;

  // Square matrices only.
  Rat det() const;

  // Trace of the induced map on the m-th exterior power: the sum of all
  // principal m x m minors.  m = 0 yields 1.
  Rat ext_trace(int m) const;

  // Solves this * X = B where the columns of B lie in the column span of
  // this; throws std::runtime_error if any column is not in the span.  The
  // solution is unique when the columns of this are linearly independent
  // (the only situation in which callers use it).
  QMatrix solve_in_column_space(const QMatrix& b) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> a_;
};

}  // namespace valuator
