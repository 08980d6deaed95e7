#pragma once

#include <array>
#include <vector>

#include "scrolllab/curve/quartic.hpp"
#include "scrolllab/exact/matrix.hpp"
#include "scrolllab/num/complexvec.hpp"

namespace scrolllab::curve {

using exact::RatMatrix;

// The six degree-2 monomials of (x0, x1, x2) in the global grlex order:
// x0^2, x0x1, x0x2, x1^2, x1x2, x2^2. Everything that talks about P^5
// coordinates uses this enumeration.
inline constexpr std::array<std::array<int, 3>, 6> kVeroneseExponents = {{
    {{2, 0, 0}}, {{1, 1, 0}}, {{1, 0, 1}}, {{0, 2, 0}}, {{0, 1, 1}}, {{0, 0, 2}},
}};

// Quadratic Veronese lift P^2 -> P^5, projectively normalized.
num::CVec veronese_lift(const num::CVec& p);

std::vector<exact::Rational> veronese_lift_exact(const std::vector<exact::Rational>& p);

// Pullback of a quadric on P^5 (symmetric 6x6 Gram) along the lift: a
// ternary quartic form, computed exactly.
exact::RatPoly veronese_pullback(const RatMatrix& gram);

struct QuadricBasis {
  std::vector<RatMatrix> grams;      // 7 symmetric 6x6 matrices
  std::vector<bool> veronese_ideal;  // true for the 6 ideal quadrics
  exact::RatPoly extra_pullback;     // pullback of the non-ideal basis element
  exact::Rational extra_multiplier;  // extra_pullback == multiplier * f
};

// The 7-dimensional space of quadrics through the bicanonical curve of a
// smooth quartic f: a quadric vanishes on the curve iff its Veronese
// pullback is a rational multiple of f. Exact reduced-echelon basis; the
// 6 quadrics of the Veronese surface ideal come first and are flagged.
QuadricBasis quadrics_through_bicanonical(const PlaneQuartic& f);

// Exact Gram matrix of the quadric with coefficient vector c over the 21
// degree-2 monomials of P^5 in global order (z_i z_j, i <= j, grlex).
RatMatrix gram_from_upper_coeffs(const std::vector<exact::Rational>& coeffs21);

}  // namespace scrolllab::curve
