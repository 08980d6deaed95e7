#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scrolllab/exact/multipoly.hpp"
#include "scrolllab/num/complexvec.hpp"
#include "scrolllab/rng.hpp"

namespace scrolllab::curve {

using exact::RatPoly;
using exact::Rational;

enum class Smoothness { certified_smooth, singular, unknown };

std::string to_string(Smoothness s);

struct SmoothnessCertificate {
  Smoothness status = Smoothness::unknown;
  // populated when singular: a common zero of the three partials
  std::optional<num::CVec> witness;
  std::optional<std::vector<Rational>> rational_witness;  // exact when available
  int attempts = 0;
};

// An exact homogeneous quartic in 3 variables; the discriminant curve C.
struct PlaneQuartic {
  RatPoly form;  // nvars == 3, homogeneous, degree 4
  SmoothnessCertificate certificate;

  bool certified_smooth() const { return certificate.status == Smoothness::certified_smooth; }
};

// Validates degree/homogeneity only; smoothness is a separate, explicit
// step because it is the expensive exact decision.
PlaneQuartic make_plane_quartic(RatPoly form);

// Decides smoothness exactly: a resultant cascade over the three partials
// in up to five random rational coordinate frames. A nonzero final
// resultant certifies smoothness outright; a persistent zero produces a
// singular witness (exact when the witness point is rational).
SmoothnessCertificate check_smooth_quartic(const RatPoly& quartic_form, Rng& rng);

// Convenience: construct + certify.
PlaneQuartic certified_quartic(RatPoly form, Rng& rng);

// Named standard curves used across tests and fixtures.
RatPoly fermat_quartic();
RatPoly klein_quartic();

}  // namespace scrolllab::curve
