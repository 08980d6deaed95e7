#include "scrolllab/exact/matrix.hpp"

#include <utility>

namespace scrolllab::exact {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  require(cols_ == o.rows_, Errc::dimension, "matrix product shape mismatch");
  RatMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, Errc::dimension, "matrix sum shape mismatch");
  RatMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) + o.at(i, j);
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, Errc::dimension, "matrix difference shape mismatch");
  RatMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
  return r;
}

RatMatrix RatMatrix::scaled(const Rational& s) const {
  RatMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) * s;
  return r;
}

bool RatMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool RatMatrix::is_zero() const {
  for (const auto& v : a_)
    if (v != 0) return false;
  return true;
}

Rational det(const RatMatrix& m) {
  require(m.rows() == m.cols(), Errc::dimension, "determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  RatMatrix a = m;
  Rational prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

namespace {

Rational minor_det(const RatMatrix& m, int skip_row, int skip_col) {
  const int n = m.rows();
  RatMatrix sub(n - 1, n - 1);
  int r = 0;
  for (int i = 0; i < n; ++i) {
    if (i == skip_row) continue;
    int c = 0;
    for (int j = 0; j < n; ++j) {
      if (j == skip_col) continue;
      sub.at(r, c) = m.at(i, j);
      ++c;
    }
    ++r;
  }
  return det(sub);
}

}  // namespace

RatMatrix adjugate(const RatMatrix& m) {
  require(m.rows() == m.cols(), Errc::dimension, "adjugate of non-square matrix");
  const int n = m.rows();
  RatMatrix adj(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational c = minor_det(m, i, j);
      if ((i + j) % 2 != 0) c = -c;
      adj.at(j, i) = c;  // transpose of cofactors
    }
  return adj;
}

RatMatrix rref(const RatMatrix& m, std::vector<int>* pivot_cols) {
  RatMatrix a = m;
  const int rows = a.rows(), cols = a.cols();
  if (pivot_cols) pivot_cols->clear();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < cols; ++j) std::swap(a.at(r, j), a.at(p, j));
    const Rational inv = Rational(1) / a.at(r, c);
    for (int j = c; j < cols; ++j) a.at(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      const Rational f = a.at(i, c);
      for (int j = c; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  return a;
}

int rank(const RatMatrix& m) {
  std::vector<int> pivots;
  rref(m, &pivots);
  return static_cast<int>(pivots.size());
}

std::vector<std::vector<Rational>> exact_nullspace(const RatMatrix& m) {
  std::vector<int> pivots;
  const RatMatrix r = rref(m, &pivots);
  const int cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (int free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free_col] = 1;
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) v[pivots[pr]] = -r.at(static_cast<int>(pr), free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  RatMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    require(static_cast<int>(rows[i].size()) == c, Errc::dimension, "ragged row list");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Rational> mat_vec(const RatMatrix& m, const std::vector<Rational>& v) {
  require(static_cast<int>(v.size()) == m.cols(), Errc::dimension, "matrix-vector shape mismatch");
  std::vector<Rational> out(m.rows(), Rational(0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
  return out;
}

}  // namespace scrolllab::exact
