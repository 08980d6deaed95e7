#pragma once

#include <cstdint>
#include <optional>

#include "scrolllab/curve/veronese.hpp"
#include "scrolllab/exact/matrix.hpp"
#include "scrolllab/num/complexvec.hpp"

namespace scrolllab::scroll {

using curve::PlaneQuartic;
using curve::QuadricBasis;
using exact::RatMatrix;
using num::CMat;

// A quadratic form on P^5: the quadric G through the bicanonical curve.
// Exact Gram kept whenever the source was rational; the numeric mirror is
// always available.
class QuadricForm6 {
 public:
  static QuadricForm6 from_exact(RatMatrix gram);
  static QuadricForm6 from_numeric(CMat gram);

  bool is_exact() const { return exact_.has_value(); }
  const RatMatrix& exact() const;
  const CMat& gram() const { return gram_; }

  int rank(double tol = 1e-10) const;  // exact rank when exact, else numeric

  // q(z) = z^T G z and the polarized form b(u, v) = 2 u^T G v.
  num::Complex quadratic(const num::CVec& z) const;
  num::Complex polarized(const num::CVec& u, const num::CVec& v) const;
  double quadratic_residual(const num::CVec& z) const;  // relative
  double polarized_residual(const num::CVec& u, const num::CVec& v) const;

 private:
  std::optional<RatMatrix> exact_;
  CMat gram_;
  mutable std::optional<int> cached_rank_;
};

// Gram matrix of the reference Plucker form
// p01 p23 - p02 p13 + p03 p12 in coordinates (p01, p02, p03, p12, p13, p23).
CMat plucker_gram();

// Exact test: the Veronese pullback of G vanishes identically iff the
// Veronese surface lies inside G.
bool detect_veronese_containment(const QuadricForm6& g);

// Random exact rank-6 member of the Veronese ideal's 6-dimensional space
// of quadrics; realizes the strictly-semistable dual-span degeneration.
QuadricForm6 construct_case_b(const PlaneQuartic& f, std::uint64_t seed);

// Random exact rank-6 quadric through the bicanonical curve (generic
// member of the full 7-dimensional space).
QuadricForm6 random_quadric_through(const PlaneQuartic& f, std::uint64_t seed);

// How far G is from the span of quadrics through the bicanonical curve:
// exact zero / nonzero when G is exact (pullback must be a multiple of f),
// else a relative least-squares residual on coefficient vectors.
double membership_residual(const QuadricForm6& g, const PlaneQuartic& f);

}  // namespace scrolllab::scroll
