#include "valuator/qmatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace valuator {

Rat rat_from_string(const std::string& s) {
  try {
    Rat r(s);
    return r;
  } catch (const std::exception&) {
    throw std::runtime_error("malformed rational literal: '" + s + "'");
  }
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<Vec>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  QMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::runtime_error("ragged rows in QMatrix::from_rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::from_cols(const std::vector<Vec>& cols) {
  const int c = static_cast<int>(cols.size());
  const int r = c == 0 ? 0 : static_cast<int>(cols[0].size());
  QMatrix m(r, c);
  for (int j = 0; j < c; ++j) {
    if (static_cast<int>(cols[j].size()) != r) throw std::runtime_error("ragged columns in QMatrix::from_cols");
    for (int i = 0; i < r; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Vec QMatrix::row(int i) const {
  Vec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec QMatrix::col(int j) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::runtime_error("QMatrix multiply: shape mismatch");
  QMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j) == 0) continue;
        r.at(i, j) += aik * o.at(k, j);
      }
    }
  return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::runtime_error("QMatrix add: shape mismatch");
  QMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::runtime_error("QMatrix sub: shape mismatch");
  QMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

QMatrix QMatrix::transpose() const {
  QMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool QMatrix::is_zero() const {
  for (const Rat& x : a_)
    if (x != 0) return false;
  return true;
}

QMatrix QMatrix::hcat(const QMatrix& o) const {
  if (rows_ != o.rows_) throw std::runtime_error("QMatrix hcat: row mismatch");
  QMatrix r(rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(QMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    const Rat inv = Rat(1) / m.at(r, c);
    for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const Rat f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int QMatrix::rank() const {
  QMatrix m = *this;
  return static_cast<int>(rref(m).size());
}

std::vector<Vec> QMatrix::kernel_basis() const {
  QMatrix m = *this;
  const std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols_, Rat(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rat QMatrix::det() const {
  if (rows_ != cols_) throw std::runtime_error("det of non-square matrix");
  QMatrix m = *this;
  Rat d = 1;
  for (int c = 0; c < cols_; ++c) {
    int p = -1;
    for (int i = c; i < rows_; ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) return Rat(0);
    if (p != c) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(c, j));
      d = -d;
    }
    d *= m.at(c, c);
    const Rat inv = Rat(1) / m.at(c, c);
    for (int i = c + 1; i < rows_; ++i) {
      if (m.at(i, c) == 0) continue;
      const Rat f = m.at(i, c) * inv;
      for (int j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return d;
}

Rat QMatrix::ext_trace(int m) const {
  if (rows_ != cols_) throw std::runtime_error("ext_trace of non-square matrix");
  if (m < 0) throw std::runtime_error("ext_trace with negative degree");
  if (m == 0) return Rat(1);
  if (m > rows_) return Rat(0);
  Rat acc = 0;
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  while (true) {
    QMatrix sub(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) sub.at(i, j) = at(idx[i], idx[j]);
    acc += sub.det();
    int k = m - 1;
    while (k >= 0 && idx[k] == rows_ - m + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int i = k + 1; i < m; ++i) idx[i] = idx[i - 1] + 1;
  }
  return acc;
}

QMatrix QMatrix::solve_in_column_space(const QMatrix& b) const {
  if (rows_ != b.rows()) throw std::runtime_error("solve_in_column_space: row mismatch");
  QMatrix aug = hcat(b);
  rref(aug);
  // Read solutions off the echelon form.  Pivot columns within the first
  // cols_ columns give equations; a pivot inside the b-block means b is not
  // in the column span.
  QMatrix x(cols_, b.cols());
  int r = 0;
  std::vector<int> pivot_col_of_row(rows_, -1);
  for (int c = 0; c < aug.cols() && r < rows_; ++c) {
    if (aug.at(r, c) != 0) {
      if (c >= cols_) throw std::runtime_error("solve_in_column_space: column not in span");
      pivot_col_of_row[r] = c;
      ++r;
    }
  }
  for (int i = 0; i < rows_; ++i) {
    if (pivot_col_of_row[i] < 0) continue;
    for (int j = 0; j < b.cols(); ++j) x.at(pivot_col_of_row[i], j) = aug.at(i, cols_ + j);
  }
  return x;
}

}  // namespace valuator
