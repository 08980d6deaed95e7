#pragma once

#include <cstdint>
#include <vector>

#include "scrolllab/curve/quartic.hpp"
#include "scrolllab/num/complexvec.hpp"

namespace scrolllab::curve {

struct CurveSample {
  std::vector<num::CVec> points;  // projective 3-vectors on C
  std::uint64_t seed = 0;
  std::vector<double> residuals;  // |f(p)| relative, one per point
};

// n complex points of C, one root per random rational line, round-robin
// over the 4 roots of each restriction so no sheet is favored.
// Deterministic given (f, n, seed). Points are pairwise distinct above
// projective distance 1e-8.
CurveSample sample_curve_points(const PlaneQuartic& f, int n, std::uint64_t seed);

}  // namespace scrolllab::curve
