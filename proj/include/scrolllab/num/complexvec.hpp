#pragma once

#include <Eigen/Dense>
#include <complex>

namespace scrolllab::num {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

// Projective representative: unit Euclidean norm, first significant entry
// rotated to the positive real axis. Every geometric point in the project
// passes through this before being stored, compared or serialized.
CVec projective_normalize(const CVec& v);

// sin of the angle between the two representative lines; scale free,
// 0 iff equal as projective points, max 1.
double projective_distance(const CVec& a, const CVec& b);

bool is_finite(const CVec& v);

}  // namespace scrolllab::num
