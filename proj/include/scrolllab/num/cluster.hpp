#pragma once

#include <vector>

#include "scrolllab/num/complexvec.hpp"

namespace scrolllab::num {

struct ClusterSet {
  std::vector<CVec> representatives;
  std::vector<int> multiplicities;
  double tolerance = 0.0;

  int count() const { return static_cast<int>(representatives.size()); }
  int total() const;
};

// Greedy clustering under projective distance: each point joins the first
// existing cluster whose representative is within tol, else founds a new
// one. Deterministic given input order; idempotent on representatives.
ClusterSet cluster_with_tolerance(const std::vector<CVec>& points, double tol);

}  // namespace scrolllab::num
