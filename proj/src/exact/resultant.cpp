#include "scrolllab/exact/resultant.hpp"

#include <unordered_map>
#include <utility>

#include "scrolllab/exact/matrix.hpp"

namespace scrolllab::exact {

namespace {

// Cofactor expansion over column subsets, memoized on the subset bitmask.
// Costs 2^n * n polynomial multiplications; fine for the n <= 6 matrices
// this project produces.
class MinorTable {
 public:
  MinorTable(const std::vector<RatPoly>& entries, int n, int nvars)
      : entries_(entries), n_(n), nvars_(nvars) {}

  RatPoly det(unsigned cols_mask, int row) {
    if (row == n_) return RatPoly::constant(nvars_, 1);
    auto it = memo_.find(cols_mask);
    if (it != memo_.end()) return it->second;
    RatPoly acc(nvars_);
    int pos = 0;  // parity counts only columns still present in the mask
    for (int c = 0; c < n_; ++c) {
      if (!(cols_mask & (1u << c))) continue;
      const RatPoly& e = entries_[static_cast<std::size_t>(row) * n_ + c];
      if (!e.is_zero()) {
        RatPoly sub = det(cols_mask & ~(1u << c), row + 1);
        sub *= e;
        if (pos % 2 != 0) sub = -sub;
        acc += sub;
      }
      ++pos;
    }
    memo_.emplace(cols_mask, acc);
    return acc;
  }

 private:
  const std::vector<RatPoly>& entries_;
  int n_;
  int nvars_;
  std::unordered_map<unsigned, RatPoly> memo_;
};

// Bareiss over the polynomial ring: all divisions are exact.
RatPoly poly_det_bareiss(std::vector<RatPoly> a, int n, int nvars) {
  if (n == 0) return RatPoly::constant(nvars, 1);
  auto at = [&](int i, int j) -> RatPoly& { return a[static_cast<std::size_t>(i) * n + j]; };
  RatPoly prev = RatPoly::constant(nvars, 1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (at(k, k).is_zero()) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (!at(i, k).is_zero()) {
          p = i;
          break;
        }
      if (p < 0) return RatPoly(nvars);
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        RatPoly num = at(k, k) * at(i, j) - at(i, k) * at(k, j);
        at(i, j) = num.is_zero() ? std::move(num) : divide_exact(num, prev);
      }
    prev = at(k, k);
  }
  RatPoly d = at(n - 1, n - 1);
  return sign > 0 ? d : -d;
}

}  // namespace

RatPoly poly_det(const std::vector<RatPoly>& entries_row_major, int n) {
  require(n >= 1, Errc::dimension, "empty matrix");
  require(static_cast<int>(entries_row_major.size()) == n * n, Errc::dimension,
          "poly_det: entry count is not n*n (non-square input)");
  const int nvars = entries_row_major[0].nvars();
  for (const auto& e : entries_row_major)
    require(e.nvars() == nvars, Errc::dimension, "poly_det: mixed variable counts");
  if (n <= 6) {
    MinorTable table(entries_row_major, n, nvars);
    return table.det((1u << n) - 1u, 0);
  }
  return poly_det_bareiss(entries_row_major, n, nvars);
}

RatPoly sylvester_resultant(const RatPoly& p, const RatPoly& q, int var) {
  require(!p.is_zero() && !q.is_zero(), Errc::degenerate_input, "resultant of zero polynomial");
  const int dp = p.degree_in(var);
  const int dq = q.degree_in(var);
  require(dp >= 1 && dq >= 1, Errc::input, "resultant needs positive degree in the eliminated variable");
  const int nvars = p.nvars();
  require(nvars == q.nvars(), Errc::dimension, "variable count mismatch");

  const auto pc = p.coeffs_in(var);
  const auto qc = q.coeffs_in(var);
  const int n = dp + dq;
  std::vector<RatPoly> m(static_cast<std::size_t>(n) * n, RatPoly(nvars));
  auto at = [&](int i, int j) -> RatPoly& { return m[static_cast<std::size_t>(i) * n + j]; };
  // dq rows of p's coefficients, then dp rows of q's, highest power first.
  for (int r = 0; r < dq; ++r)
    for (int k = 0; k <= dp; ++k) at(r, r + k) = pc[static_cast<std::size_t>(dp - k)];
  for (int r = 0; r < dp; ++r)
    for (int k = 0; k <= dq; ++k) at(dq + r, r + k) = qc[static_cast<std::size_t>(dq - k)];
  return poly_det_bareiss(std::move(m), n, nvars);
}

Rational resultant_univariate(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  auto trim = [](std::vector<Rational> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
  };
  const auto pt = trim(p);
  const auto qt = trim(q);
  require(!pt.empty() && !qt.empty(), Errc::degenerate_input, "resultant of zero polynomial");
  const int dp = static_cast<int>(pt.size()) - 1;
  const int dq = static_cast<int>(qt.size()) - 1;
  auto ipow = [](const Rational& b, int e) {
    Rational r(1);
    for (int i = 0; i < e; ++i) r *= b;
    return r;
  };
  if (dp == 0) return ipow(pt[0], dq);
  if (dq == 0) return ipow(qt[0], dp);
  const int n = dp + dq;
  RatMatrix m(n, n);
  for (int r = 0; r < dq; ++r)
    for (int k = 0; k <= dp; ++k) m.at(r, r + k) = pt[static_cast<std::size_t>(dp - k)];
  for (int r = 0; r < dp; ++r)
    for (int k = 0; k <= dq; ++k) m.at(dq + r, r + k) = qt[static_cast<std::size_t>(dq - k)];
  return det(m);
}

}  // namespace scrolllab::exact
