#pragma once

#include "scrolllab/scroll/double_curve.hpp"

namespace scrolllab::scroll {

struct TripleScanConfig {
  int resolution = 2000;        // raster nodes over the parameter chart
  double box_halfwidth = 3.0;   // chart square [-L, L]^2 for the sweep
  double detect_threshold = 0.05;  // pair-collision level that opens a window
  double cluster_tol = 1e-6;
  int max_refinements = 600;
  std::uint64_t seed = 1;
};

struct TripleCluster {
  CVec point;                      // the concurrency point in P^3
  int parameter_count = 0;        // distinct curve parameters that found it
  double worst_collision = 0.0;   // o_i vs o_j distance at acceptance
  double octic_order2_residual = -1.0;  // worst order<=2 derivative residual, when an octic was supplied
};

struct UnresolvedWindow {
  Complex lambda;
  int sheet = 0;
  double best_collision = 0.0;
  std::string reason;
};

struct TripleScanReport {
  std::vector<TripleCluster> clusters;
  std::vector<UnresolvedWindow> unresolved;
  int count() const { return static_cast<int>(clusters.size()); }
  int seeds_opened = 0;
  int seeds_converged = 0;
  TripleScanConfig config;
};

// Sweeps the curve chart x = (1, a, b), f(1, a, b) = 0, along a serpentine
// raster of the a-plane (all four sheets tracked), watching the fifteen
// partner pairs for line-pair collisions b_G(y_i, y_j) -> 0. Each window
// is refined by a secant iteration in the chart parameter; converged
// triangles are verified for genuine concurrency (three lines through one
// point, not merely coplanar) and clustered. Windows that fail to resolve
// are reported, never dropped.
TripleScanReport triple_locus_scan(const ScrollScene& scene, const TripleScanConfig& cfg,
                                   const OcticSurface* octic = nullptr);

}  // namespace scrolllab::scroll
