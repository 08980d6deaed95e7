#include "scrolllab/num/roots.hpp"

#include <algorithm>
#include <cmath>

#include "scrolllab/errors.hpp"

namespace scrolllab::num {

using C = std::complex<double>;

C eval_poly(const std::vector<C>& coeffs, C x) {
  C acc(0.0, 0.0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

static C eval_deriv(const std::vector<C>& coeffs, C x) {
  C acc(0.0, 0.0);
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 1; --i) acc = acc * x + coeffs[static_cast<std::size_t>(i)] * static_cast<double>(i);
  return acc;
}

double root_residual(const std::vector<C>& coeffs, C r) {
  const double ar = std::abs(r);
  double scale = 0.0, p = 1.0;
  for (const auto& c : coeffs) {
    scale += std::abs(c) * p;
    p *= ar;
  }
  if (scale == 0.0) return 0.0;
  return std::abs(eval_poly(coeffs, r)) / scale;
}

std::vector<RootResult> univariate_roots(const std::vector<C>& coeffs_in, int max_iterations) {
  // trim tiny leading coefficients, relative to the largest magnitude
  double maxmag = 0.0;
  for (const auto& c : coeffs_in) maxmag = std::max(maxmag, std::abs(c));
  require(maxmag > 0.0, Errc::degenerate_input, "root finding on the zero polynomial");
  std::vector<C> c = coeffs_in;
  while (c.size() > 1 && std::abs(c.back()) < 1e-14 * maxmag) c.pop_back();
  const int n = static_cast<int>(c.size()) - 1;
  require(n >= 1, Errc::degenerate_input, "root finding needs degree >= 1");

  // factor out roots at the origin
  int zero_roots = 0;
  while (zero_roots < n && std::abs(c[static_cast<std::size_t>(zero_roots)]) < 1e-300) ++zero_roots;
  std::vector<C> work(c.begin() + zero_roots, c.end());
  const int d = static_cast<int>(work.size()) - 1;

  std::vector<C> z(static_cast<std::size_t>(d));
  if (d > 0) {
    // Cauchy-style radius from coefficient magnitudes, perturbed start circle
    double radius = 0.0;
    const double lead = std::abs(work.back());
    for (int i = 0; i < d; ++i) radius = std::max(radius, std::pow(std::abs(work[static_cast<std::size_t>(i)]) / lead, 1.0 / (d - i)));
    radius = std::max(radius, 0.5);
    for (int i = 0; i < d; ++i) {
      const double theta = 2.0 * M_PI * i / d + 0.41;  // fixed offset avoids symmetric stalls
      z[static_cast<std::size_t>(i)] = radius * C(std::cos(theta), std::sin(theta)) * (1.0 + 1e-3 * i);
    }
  }

  int iter = 0;
  for (; iter < max_iterations && d > 0; ++iter) {
    double step_max = 0.0;
    for (int i = 0; i < d; ++i) {
      const C zi = z[static_cast<std::size_t>(i)];
      const C p = eval_poly(work, zi);
      const C dp = eval_deriv(work, zi);
      C newton = (std::abs(dp) > 1e-300) ? p / dp : C(0.0, 0.0);
      C sum(0.0, 0.0);
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        const C diff = zi - z[static_cast<std::size_t>(j)];
        if (std::abs(diff) > 1e-300) sum += 1.0 / diff;
      }
      const C denom = 1.0 - newton * sum;
      const C delta = (std::abs(denom) > 1e-300) ? newton / denom : newton;
      z[static_cast<std::size_t>(i)] -= delta;
      step_max = std::max(step_max, std::abs(delta) / std::max(1.0, std::abs(zi)));
    }
    if (step_max < 1e-15) break;
  }

  std::vector<RootResult> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < zero_roots; ++i) out.push_back({C(0.0, 0.0), root_residual(c, C(0.0, 0.0))});
  for (int i = 0; i < d; ++i) out.push_back({z[static_cast<std::size_t>(i)], root_residual(c, z[static_cast<std::size_t>(i)])});

  // deterministic order: by real part, then imaginary
  std::sort(out.begin(), out.end(), [](const RootResult& a, const RootResult& b) {
    if (a.root.real() != b.root.real()) return a.root.real() < b.root.real();
    return a.root.imag() < b.root.imag();
  });

  if (iter >= max_iterations) {
    // multiple roots legitimately stall near 1e-8 steps; only escalate when
    // residuals look broken
    double worst = 0.0;
    for (const auto& r : out) worst = std::max(worst, r.residual);
    if (worst > 1e-6) throw RootConvergenceError{out, iter};
  }
  return out;
}

}  // namespace scrolllab::num
