#pragma once

#include "scrolllab/scroll/fit.hpp"

namespace scrolllab::scroll {

// Everything the per-point operations need, built once per (G, f, ruling)
// triple: the frame, complex mirrors of the quartic, and the symbolic
// Plucker forms.
struct ScrollScene {
  QuadricForm6 g;
  PlaneQuartic f;
  exact::CPoly fc;  // complex mirror of f.form
  IsotropicFrame frame;
  bool swapped = false;
  std::array<exact::CPoly, 6> plucker_forms;  // quadratic forms in x

  Line3 line_of(const CVec& x) const;
  CVec plucker_of(const CVec& x) const;

  // b_G(lift(x), lift(.)) as a conic form in the plane coordinates.
  exact::CPoly partner_conic(const CVec& x) const;
};

ScrollScene make_scene(const QuadricForm6& g, const PlaneQuartic& f, bool swap_ruling = false);

}  // namespace scrolllab::scroll
