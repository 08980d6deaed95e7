#pragma once

#include <complex>
#include <vector>

namespace scrolllab::num {

struct RootResult {
  std::complex<double> root;
  double residual;  // |p(r)| / sum_i |c_i| |r|^i
};

// Thrown when Aberth iteration stalls; carries the best iterate so the
// caller can decide whether the partial answer is usable.
struct RootConvergenceError {
  std::vector<RootResult> best;
  int iterations;
};

// All complex roots of sum_i coeffs[i] x^i by Aberth-Ehrlich simultaneous
// iteration. Leading coefficients below 1e-14 of the max magnitude are
// trimmed first. Deterministic given the coefficient list.
std::vector<RootResult> univariate_roots(const std::vector<std::complex<double>>& coeffs,
                                         int max_iterations = 200);

// Backward-stable residual used everywhere a root quality is reported.
double root_residual(const std::vector<std::complex<double>>& coeffs, std::complex<double> r);

std::complex<double> eval_poly(const std::vector<std::complex<double>>& coeffs, std::complex<double> x);

}  // namespace scrolllab::num
