#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "scrolllab/num/elim.hpp"
#include "scrolllab/scroll/linemap.hpp"

namespace scrolllab::scroll {

// Implicit equation of the scroll: degree-8 form in 4 variables, 165
// coefficients in global monomial order, scaled so the largest coefficient
// is exactly 1.
struct OcticSurface {
  exact::CPoly form;  // nvars == 4
  std::vector<Complex> coeffs;
  double validation_residual = 0.0;
  std::uint64_t seed = 0;
  double nullspace_tol = 0.0;
};

// Raised when the degree-8 fit has nullity >= 2: the scroll degenerated to
// lower degree (quadric / quartic scroll exclusions). Carries diagnostic
// nullities from refits at degrees 2 and 4.
struct ScrollDegeneration {
  int nullity_deg8 = 0;
  int nullity_deg2 = 0;
  int nullity_deg4 = 0;
};

struct FitOutcome {
  std::optional<OcticSurface> octic;
  std::optional<ScrollDegeneration> degeneration;
  bool ok() const { return octic.has_value(); }
};

// Implicitize the line family at degree exactly 8 by monomial-matrix
// nullspace; demands nullity exactly 1 and validates against a disjoint
// sample set. Nullity 0 throws Errc::fit (insufficient samples).
FitOutcome fit_scroll(const std::vector<Line3>& lines, int pts_per_line, std::uint64_t seed,
                      double nullspace_tol = 1e-8, double validation_tol = 1e-8);

inline FitOutcome fit_scroll(const LineMap& map, int pts_per_line, std::uint64_t seed,
                             double nullspace_tol = 1e-8, double validation_tol = 1e-8) {
  std::vector<Line3> lines;
  lines.reserve(map.entries.size());
  for (const auto& e : map.entries) lines.push_back(e.line);
  return fit_scroll(lines, pts_per_line, seed, nullspace_tol, validation_tol);
}

// Coefficients of F restricted to a line (degree-8 univariate).
num::UniPoly restrict_octic_to_line(const OcticSurface& f, const Line3& line);

struct MultiplicityCheck {
  bool pass = false;
  int order = 0;
  double worst_residual = 0.0;
  std::vector<double> per_sample_worst;  // worst residual across derivatives, per sample
};

// Evaluates every partial derivative of F of total order <= k at each
// sample; passes iff all relative residuals stay below tol.
MultiplicityCheck multiplicity_along_curve(const OcticSurface& f, const std::vector<CVec>& samples, int order,
                                           double tol = 1e-6);

// Largest k+1 such that order-k vanishing passes (the multiplicity profile
// of the samples' component).
int multiplicity_profile(const OcticSurface& f, const std::vector<CVec>& samples, int max_order = 4,
                         double tol = 1e-6);

}  // namespace scrolllab::scroll
