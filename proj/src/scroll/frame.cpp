#include "scrolllab/scroll/frame.hpp"

#include <cmath>

namespace scrolllab::scroll {

using num::Complex;
using num::CVec;

namespace {

Complex bform(const CMat& g, const CVec& u, const CVec& v) { return (u.transpose() * g * v)(0, 0); }

// isotropic vector in the span of the columns of basis (all w.r.t. the
// symmetric bilinear form g); deterministic choices only
CVec isotropic_in_span(const CMat& g, const CMat& basis) {
  const int k = static_cast<int>(basis.cols());
  const double scale = g.norm();
  // a basis vector may already be isotropic
  for (int i = 0; i < k; ++i) {
    const CVec a = basis.col(i);
    if (std::abs(bform(g, a, a)) < 1e-14 * scale * a.squaredNorm()) return a;
  }
  // otherwise solve q(a + t b) = 0 in a 2-plane
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const CVec a = basis.col(i);
      const CVec b = basis.col(j);
      const Complex qa = bform(g, a, a);
      const Complex qb = bform(g, b, b);
      const Complex qab = bform(g, a, b);
      // qb t^2 + 2 qab t + qa = 0
      const Complex disc = std::sqrt(qab * qab - qa * qb);
      for (const Complex root :
           {(-qab + disc) / qb, (-qab - disc) / qb}) {
        if (!std::isfinite(root.real()) || !std::isfinite(root.imag())) continue;
        CVec v = a + root * b;
        if (v.norm() > 1e-8 * (a.norm() + b.norm())) return v;
      }
    }
  fail(Errc::rank, "no isotropic vector found (form numerically degenerate)");
}

}  // namespace

IsotropicFrame isotropic_frame(const QuadricForm6& g, double residual_tol) {
  require(g.rank() == 6, Errc::rank, "isotropic frame requires rank(G) = 6");
  const CMat gram = g.gram();
  const double gnorm = gram.norm();

  // target pairing constants per block: w0*w5 (+1/2), w1*w4 (-1/2), w2*w3 (+1/2)
  const Complex sigma[3] = {Complex(0.5, 0.0), Complex(-0.5, 0.0), Complex(0.5, 0.0)};

  CMat basis = CMat::Identity(6, 6);
  std::vector<CVec> v_blocks, u_blocks;
  for (int block = 0; block < 3; ++block) {
    CVec v = isotropic_in_span(gram, basis);
    v /= v.norm();

    // partner with the largest pairing against v
    int best = -1;
    double best_mag = 0.0;
    for (int i = 0; i < basis.cols(); ++i) {
      const double mag = std::abs(bform(gram, v, basis.col(i)));
      if (mag > best_mag) {
        best_mag = mag;
        best = i;
      }
    }
    require(best >= 0 && best_mag > 1e-12 * gnorm, Errc::rank,
            "isotropic vector has no partner (rank deficiency)");
    CVec w = basis.col(best);
    const Complex bvw = bform(gram, v, w);
    CVec u = w - (bform(gram, w, w) / (2.0 * bvw)) * v;  // isotropic partner
    u *= sigma[block] / bform(gram, v, u);               // b(v, u) = sigma

    v_blocks.push_back(v);
    u_blocks.push_back(u);
    if (block == 2) break;

    // b-orthogonal complement of span(v, u) inside the current space:
    // project every basis column, then keep an orthonormal basis of the
    // projected column space (rank k-2)
    const int k = static_cast<int>(basis.cols());
    CMat projected(6, k);
    for (int i = 0; i < k; ++i) {
      CVec r = basis.col(i);
      r -= (bform(gram, r, u) / bform(gram, v, u)) * v;
      r -= (bform(gram, r, v) / bform(gram, u, v)) * u;
      projected.col(i) = r;
    }
    Eigen::ColPivHouseholderQR<CMat> qr(projected);
    qr.setThreshold(1e-10);
    require(qr.rank() >= k - 2, Errc::rank, "orthogonal complement collapsed during peeling");
    basis = CMat(qr.householderQ()) * CMat::Identity(6, k - 2);
  }

  IsotropicFrame frame;
  frame.transform = CMat(6, 6);
  // column order matches the Plucker coordinates (p01,p02,p03,p12,p13,p23):
  // pairs (0,5), (1,4), (2,3)
  frame.transform.col(0) = v_blocks[0];
  frame.transform.col(5) = u_blocks[0];
  frame.transform.col(1) = v_blocks[1];
  frame.transform.col(4) = u_blocks[1];
  frame.transform.col(2) = v_blocks[2];
  frame.transform.col(3) = u_blocks[2];

  const CMat target = plucker_gram();
  const CMat achieved = frame.transform.transpose() * gram * frame.transform;
  frame.residual = (achieved - target).norm() / target.norm();
  require(frame.residual < residual_tol, Errc::rank,
          "isotropic frame residual " + std::to_string(frame.residual) + " exceeds tolerance");
  frame.inverse = frame.transform.partialPivLu().inverse();
  return frame;
}

}  // namespace scrolllab::scroll
