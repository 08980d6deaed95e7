#pragma once

#include "scrolllab/num/complexvec.hpp"

namespace scrolllab::num {

// Numerical right nullspace via column-pivoted Householder QR: columns
// whose pivot falls below tol * (largest pivot) are treated as dependent.
// Returned vectors are orthonormal and projectively normalized; each
// satisfies ||M v|| / ||M|| < 10 * tol for honest inputs.
std::vector<CVec> numeric_nullspace(const CMat& m, double tol);

int numeric_rank(const CMat& m, double tol);

}  // namespace scrolllab::num
