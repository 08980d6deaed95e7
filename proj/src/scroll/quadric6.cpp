#include "scrolllab/scroll/quadric6.hpp"

#include "scrolllab/num/nullspace.hpp"
#include "scrolllab/rng.hpp"

namespace scrolllab::scroll {

using exact::Rational;
using num::Complex;
using num::CVec;

QuadricForm6 QuadricForm6::from_exact(RatMatrix gram) {
  require(gram.rows() == 6 && gram.cols() == 6, Errc::dimension, "Gram matrix must be 6x6");
  require(gram.is_symmetric(), Errc::input, "Gram matrix must be symmetric");
  QuadricForm6 q;
  q.gram_ = CMat(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) q.gram_(i, j) = exact::to_complex(gram.at(i, j));
  q.exact_ = std::move(gram);
  return q;
}

QuadricForm6 QuadricForm6::from_numeric(CMat gram) {
  require(gram.rows() == 6 && gram.cols() == 6, Errc::dimension, "Gram matrix must be 6x6");
  const double asym = (gram - gram.transpose()).norm();
  require(asym <= 1e-9 * std::max(1.0, gram.norm()), Errc::input, "Gram matrix must be symmetric");
  QuadricForm6 q;
  q.gram_ = (gram + gram.transpose()) / 2.0;
  return q;
}

const RatMatrix& QuadricForm6::exact() const {
  require(exact_.has_value(), Errc::precondition, "exact Gram requested from a numeric quadric");
  return *exact_;
}

int QuadricForm6::rank(double tol) const {
  if (!cached_rank_) {
    if (exact_)
      cached_rank_ = exact::rank(*exact_);
    else
      cached_rank_ = num::numeric_rank(gram_, tol);
  }
  return *cached_rank_;
}

Complex QuadricForm6::quadratic(const CVec& z) const { return (z.transpose() * gram_ * z)(0, 0); }

Complex QuadricForm6::polarized(const CVec& u, const CVec& v) const {
  return 2.0 * (u.transpose() * gram_ * v)(0, 0);
}

double QuadricForm6::quadratic_residual(const CVec& z) const {
  const double scale = gram_.cwiseAbs().maxCoeff() * z.squaredNorm();
  if (scale == 0.0) return 0.0;
  return std::abs(quadratic(z)) / scale;
}

double QuadricForm6::polarized_residual(const CVec& u, const CVec& v) const {
  const double scale = 2.0 * gram_.cwiseAbs().maxCoeff() * u.norm() * v.norm();
  if (scale == 0.0) return 0.0;
  return std::abs(polarized(u, v)) / scale;
}

CMat plucker_gram() {
  CMat g = CMat::Zero(6, 6);
  g(0, 5) = g(5, 0) = Complex(0.5, 0.0);
  g(1, 4) = g(4, 1) = Complex(-0.5, 0.0);
  g(2, 3) = g(3, 2) = Complex(0.5, 0.0);
  return g;
}

bool detect_veronese_containment(const QuadricForm6& g) {
  return curve::veronese_pullback(g.exact()).is_zero();
}

QuadricForm6 construct_case_b(const PlaneQuartic& f, std::uint64_t seed) {
  const QuadricBasis basis = curve::quadrics_through_bicanonical(f);
  Rng rng(seed);
  for (int attempt = 0; attempt < 50; ++attempt) {
    RatMatrix g(6, 6);
    for (std::size_t k = 0; k < basis.grams.size(); ++k) {
      if (!basis.veronese_ideal[k]) continue;
      const Rational c = rng.rational(9, 4);
      g = g + basis.grams[k].scaled(c);
    }
    if (exact::rank(g) == 6) return QuadricForm6::from_exact(std::move(g));
  }
  fail(Errc::input, "construct_case_b: no rank-6 combination found within 50 seeded draws");
}

QuadricForm6 random_quadric_through(const PlaneQuartic& f, std::uint64_t seed) {
  const QuadricBasis basis = curve::quadrics_through_bicanonical(f);
  Rng rng(seed);
  for (int attempt = 0; attempt < 50; ++attempt) {
    RatMatrix g(6, 6);
    for (std::size_t k = 0; k < basis.grams.size(); ++k) g = g + basis.grams[k].scaled(rng.rational(9, 4));
    // a generic draw must involve the non-ideal direction, else it lands in
    // the case-b stratum by construction
    const exact::RatPoly pb = curve::veronese_pullback(g);
    if (exact::rank(g) == 6 && !pb.is_zero()) return QuadricForm6::from_exact(std::move(g));
  }
  fail(Errc::input, "random_quadric_through: no rank-6 draw within 50 attempts");
}

double membership_residual(const QuadricForm6& g, const PlaneQuartic& f) {
  if (g.is_exact()) {
    // pullback must equal c * f exactly for some rational c (possibly 0)
    const exact::RatPoly pb = curve::veronese_pullback(g.exact());
    if (pb.is_zero()) return 0.0;
    const auto& flead = *f.form.terms().begin();
    const Rational c = pb.coeff(flead.first) / flead.second;
    exact::RatPoly diff = pb - f.form * c;
    return diff.is_zero() ? 0.0 : 1.0;
  }
  // numeric: least-squares distance of the coefficient vector to the span
  const QuadricBasis basis = curve::quadrics_through_bicanonical(f);
  CMat a(36, 7);
  CVec b(36);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      const int r = i * 6 + j;
      for (int k = 0; k < 7; ++k) a(r, k) = exact::to_complex(basis.grams[static_cast<std::size_t>(k)].at(i, j));
      b(r) = g.gram()(i, j);
    }
  const CVec sol = a.colPivHouseholderQr().solve(b);
  const double denom = b.norm();
  if (denom == 0.0) return 0.0;
  return (a * sol - b).norm() / denom;
}

}  // namespace scrolllab::scroll
