#pragma once

#include <array>
#include <optional>
#include <vector>

#include "scrolllab/curve/sample.hpp"
#include "scrolllab/scroll/frame.hpp"

namespace scrolllab::scroll {

using num::Complex;
using num::CVec;

// A line in P^3 carried in both representations: a spanning point pair
// and Plucker coordinates (p01, p02, p03, p12, p13, p23).
struct Line3 {
  CVec point_a, point_b;  // normalized spanning points
  CVec plucker;           // normalized, satisfies the Plucker relation
};

CVec plucker_of_points(const CVec& a, const CVec& b);
Complex plucker_quadratic(const CVec& p);  // p01 p23 - p02 p13 + p03 p12
double plucker_residual(const CVec& p);    // relative

// Antisymmetric 4x4 matrices of a line: the primal matrix maps a plane to
// the incidence point, the dual maps a point to the joining plane; the
// dual annihilates exactly the points of the line.
CMat primal_plucker_matrix(const CVec& p);
CMat dual_plucker_matrix(const CVec& p);

// Coordinate involution exchanging the two spinor families (primal/dual
// line coordinates); preserves the Plucker quadratic.
CVec ruling_swap(const CVec& p);

Line3 line_from_plucker(const CVec& p);
Line3 line_from_points(const CVec& a, const CVec& b);

// Meet of two lines when they intersect (checked through the dual matrix
// membership residual); nullopt for skew or equal lines.
std::optional<CVec> intersect_lines(const Line3& l1, const Line3& l2, double tol = 1e-7);

CVec line_plane_intersection(const Line3& l, const CVec& plane);

struct LineMapEntry {
  CVec x;        // point on C (P^2)
  CVec lift;     // bicanonical point (P^5)
  CVec plucker;  // line coordinates after the frame
  Line3 line;
  double plucker_res;
  double on_g_res;
};

struct LineMap {
  IsotropicFrame frame;
  bool swapped = false;
  std::uint64_t seed = 0;
  std::vector<LineMapEntry> entries;
};

// x -> l_x for n sampled curve points: lift to P^5, apply the frame
// inverse (one ruling choice), read the line. Throws Errc::rank / input on
// contract breaches and Errc::elimination if residuals break down.
LineMap build_line_map(const QuadricForm6& g, const PlaneQuartic& f, int n, std::uint64_t seed,
                       bool swap_ruling = false, double residual_tol = 1e-8);

// Plucker coordinates of l_x as six quadratic forms in x, and the plane
// section point l_x . H as four quadratic forms; the symbolic versions of
// the line map used by the elimination routines.
std::array<exact::CPoly, 6> symbolic_plucker(const IsotropicFrame& frame, bool swapped);
std::array<exact::CPoly, 4> symbolic_plane_section(const IsotropicFrame& frame, bool swapped, const CVec& plane);

}  // namespace scrolllab::scroll
