#pragma once

#include "scrolllab/scroll/quadric6.hpp"

namespace scrolllab::scroll {

// Complex change of basis T with T^T * gram(G) * T equal to the Plucker
// Gram matrix. Identifies the smooth quadric G with the Grassmannian of
// lines so Plucker vectors can be read off by applying T^{-1}.
struct IsotropicFrame {
  CMat transform;          // T
  CMat inverse;            // T^{-1}, cached
  double residual = 0.0;   // relative ||T^T G T - plucker|| / ||plucker||
};

// Hyperbolic-pair peeling over the complex numbers: find an isotropic
// vector as the root of a quadratic in a 2-plane, pair it, normalize the
// block, recurse on the b-orthogonal complement. Throws Errc::rank when
// rank(G) < 6.
IsotropicFrame isotropic_frame(const QuadricForm6& g, double residual_tol = 1e-9);

}  // namespace scrolllab::scroll
