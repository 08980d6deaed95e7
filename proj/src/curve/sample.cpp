#include "scrolllab/curve/sample.hpp"

#include "scrolllab/num/elim.hpp"
#include "scrolllab/num/roots.hpp"

namespace scrolllab::curve {

using num::Complex;
using num::CVec;

CurveSample sample_curve_points(const PlaneQuartic& f, int n, std::uint64_t seed) {
  require(n >= 1, Errc::input, "sample count must be >= 1");
  require(f.certified_smooth(), Errc::precondition, "sampling requires a certified-smooth quartic");

  const exact::CPoly fc = exact::to_cpoly(f.form);
  Rng rng(seed);
  CurveSample out;
  out.seed = seed;

  int line_index = 0;
  int failures = 0;
  while (static_cast<int>(out.points.size()) < n) {
    require(failures < 60 + 10 * n, Errc::sampling, "persistent residual failure while sampling curve points");

    CVec base(3), dir(3);
    for (int i = 0; i < 3; ++i) {
      base[i] = exact::to_complex(rng.rational(9, 4));
      dir[i] = exact::to_complex(rng.rational(9, 4));
    }
    if (base.norm() == 0.0 || dir.norm() == 0.0 || num::projective_distance(base, dir) < 1e-6) {
      ++failures;
      continue;
    }

    auto restricted = num::restrict_to_segment(fc, base, dir);
    num::unipoly_trim(restricted);
    if (restricted.size() != 5) {  // line through special position; redraw
      ++failures;
      continue;
    }
    std::vector<num::RootResult> roots;
    try {
      roots = num::univariate_roots(restricted);
    } catch (const num::RootConvergenceError&) {
      ++failures;
      continue;
    }
    const auto& pick = roots[static_cast<std::size_t>(line_index) % roots.size()];
    ++line_index;

    CVec p = num::projective_normalize(base + pick.root * dir);
    const double res = num::relative_residual(fc, p);
    if (res > 1e-10) {
      ++failures;
      continue;
    }
    bool duplicate = false;
    for (const auto& q : out.points)
      if (num::projective_distance(q, p) < 1e-8) duplicate = true;
    if (duplicate) {
      ++failures;
      continue;
    }
    out.points.push_back(std::move(p));
    out.residuals.push_back(res);
  }
  return out;
}

}  // namespace scrolllab::curve
