#pragma once

#include <vector>

#include "scrolllab/exact/multipoly.hpp"

namespace scrolllab::exact {

// Determinant of a square matrix of polynomials (row-major), expanded by
// cofactors with memoized minors. Intended for small matrices (the project
// needs size <= 6: net matrices and Gram matrices).
RatPoly poly_det(const std::vector<RatPoly>& entries_row_major, int n);

// Sylvester resultant of p and q with respect to variable `var`. The
// determinant of the Sylvester matrix is computed by fraction-free
// Gaussian elimination over the polynomial ring to keep coefficient
// growth at minor size. Requires positive degree in `var` for both.
RatPoly sylvester_resultant(const RatPoly& p, const RatPoly& q, int var);

// Resultant of two univariate rational polynomials given as coefficient
// vectors (index = power). Scalar Bareiss.
Rational resultant_univariate(const std::vector<Rational>& p, const std::vector<Rational>& q);

}  // namespace scrolllab::exact
