#pragma once

#include "scrolllab/scroll/scene.hpp"

namespace scrolllab::scroll {

struct PartnerSet {
  CVec x;
  Line3 line_x;
  std::vector<CVec> partners;       // the 6 residual intersection parameters
  std::vector<Line3> partner_lines;
  std::vector<CVec> meets;          // o_i = l_x . l_{y_i}, aligned with partners
  int x_multiplicity = 0;           // multiplicity of x among the 8 roots
  bool tangency_flag = false;       // set when x multiplicity != 2 or count != 6
  double worst_pair_residual = 0.0; // b_G residual over returned partners
};

// The six partners of x: intersect the polarized conic b_G(lift x, lift .)
// with the quartic (8 roots, x doubled since b_G vanishes identically on
// the diagonal of C), strip x, intersect the line pairs.
PartnerSet double_curve_partners(const ScrollScene& scene, const CVec& x, double cluster_tol = 1e-6);

// Partner parameters only (no line work); the fast path for sweeps.
std::vector<CVec> partner_points(const ScrollScene& scene, const CVec& x, double cluster_tol = 1e-6);

struct PlaneCountReport {
  int count = 0;                     // distinct double-curve points on the plane
  int verified = 0;                  // nodes whose (x,y) pair passed the full system residuals
  int ordered_pair_count = 0;        // solutions of the (x,y) system before the swap quotient
  double worst_system_residual = 0.0;
  double fit_residual = 0.0;
  std::uint64_t seed = 0;
  double cluster_tol = 0.0;
};

// Degree of the double curve measured on a plane H: implicitize the plane
// section octic from line-map samples, locate its nodes, and resolve each
// node back to the (x, y) pair solving { f(x), f(y), b_G(x,y), H(o(x,y)) }.
// Guarded against the special strata: multiplicity >= 3 inputs are
// rejected with Errc::precondition.
PlaneCountReport double_curve_plane_count(const ScrollScene& scene, const CVec& plane, std::uint64_t seed,
                                          double cluster_tol = 1e-6, double nullspace_tol = 1e-8);

// Quick partner-collision profile used by the plane-count guard and the
// classifier: how the 6 meets of a sampled x cluster (6 = generic,
// 3 = case (a), 2 = case (b)).
std::vector<int> meet_cluster_profile(const ScrollScene& scene, int samples, std::uint64_t seed,
                                      double cluster_tol = 1e-6);

}  // namespace scrolllab::scroll
