#pragma once

#include <vector>

#include "scrolllab/errors.hpp"
#include "scrolllab/exact/rational.hpp"

namespace scrolllab::exact {

// Dense row-major rational matrix. Small sizes only (<= a few dozen rows);
// everything here is exact.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Rational(0)) {
    require(rows >= 0 && cols >= 0, Errc::dimension, "negative matrix dimension");
  }

  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix scaled(const Rational& s) const;
  bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  bool is_symmetric() const;
  bool is_zero() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// Fraction-free (Bareiss) determinant; exact, no pivot growth surprises.
Rational det(const RatMatrix& m);

// Transposed cofactor matrix; for symmetric rank-3 input this is the
// rank-1 product of the kernel vector with itself, which downstream code
// exploits.
RatMatrix adjugate(const RatMatrix& m);

int rank(const RatMatrix& m);

// Reduced row echelon form; returns pivot column indices.
RatMatrix rref(const RatMatrix& m, std::vector<int>* pivot_cols = nullptr);

// Basis of the right nullspace in reduced-echelon normal form: one vector
// per free column, with a 1 in that free column and zeros in the other
// free columns. Deterministic.
std::vector<std::vector<Rational>> exact_nullspace(const RatMatrix& m);

RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

std::vector<Rational> mat_vec(const RatMatrix& m, const std::vector<Rational>& v);

}  // namespace scrolllab::exact
