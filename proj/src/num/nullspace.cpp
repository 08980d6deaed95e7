#include "scrolllab/num/nullspace.hpp"

#include <Eigen/QR>

#include "scrolllab/errors.hpp"

namespace scrolllab::num {

namespace {

int rank_from_qr(const Eigen::ColPivHouseholderQR<CMat>& qr, int ncols, double tol) {
  const auto& r = qr.matrixR();
  const double top = std::abs(r(0, 0));
  if (top == 0.0) return 0;
  int rank = 0;
  const int steps = std::min<int>(static_cast<int>(r.rows()), ncols);
  for (int i = 0; i < steps; ++i)
    if (std::abs(r(i, i)) > tol * top) ++rank;
  return rank;
}

}  // namespace

std::vector<CVec> numeric_nullspace(const CMat& m, double tol) {
  require(tol > 0.0, Errc::input, "nullspace tolerance must be positive");
  const int ncols = static_cast<int>(m.cols());
  if (m.rows() == 0 || m.size() == 0) {
    std::vector<CVec> basis;
    for (int i = 0; i < ncols; ++i) {
      CVec v = CVec::Zero(ncols);
      v[i] = 1.0;
      basis.push_back(v);
    }
    return basis;
  }
  Eigen::ColPivHouseholderQR<CMat> qr(m);
  const int r = rank_from_qr(qr, ncols, tol);
  const int nullity = ncols - r;
  std::vector<CVec> basis;
  if (nullity == 0) return basis;

  // R * P^T x = 0; with R = [R11 R12; 0 ~0] the nullspace is spanned by
  // P [ -R11^{-1} R12 ; I ].
  const CMat R = qr.matrixR().topRows(std::min<int>(static_cast<int>(m.rows()), ncols));
  CMat X = CMat::Zero(ncols, nullity);
  if (r > 0) {
    const CMat R12 = R.topRightCorner(r, nullity);
    X.topRows(r) = -R.topLeftCorner(r, r).triangularView<Eigen::Upper>().solve(R12);
  }
  X.bottomRows(nullity) = CMat::Identity(nullity, nullity);
  CMat V = qr.colsPermutation() * X;

  // orthonormalize for stable downstream use
  Eigen::HouseholderQR<CMat> oqr(V);
  CMat Q = oqr.householderQ() * CMat::Identity(ncols, nullity);
  const double mnorm = m.norm();
  for (int j = 0; j < nullity; ++j) {
    CVec v = projective_normalize(Q.col(j));
    if (mnorm > 0.0) {
      const double res = (m * v).norm() / mnorm;
      require(res < 10.0 * tol, Errc::rank, "numeric nullspace residual exceeded contract");
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

int numeric_rank(const CMat& m, double tol) {
  require(tol > 0.0, Errc::input, "rank tolerance must be positive");
  if (m.size() == 0) return 0;
  Eigen::ColPivHouseholderQR<CMat> qr(m);
  return rank_from_qr(qr, static_cast<int>(m.cols()), tol);
}

}  // namespace scrolllab::num
