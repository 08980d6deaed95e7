#include "scrolllab/num/cluster.hpp"

#include <numeric>

#include "scrolllab/errors.hpp"

namespace scrolllab::num {

int ClusterSet::total() const { return std::accumulate(multiplicities.begin(), multiplicities.end(), 0); }

ClusterSet cluster_with_tolerance(const std::vector<CVec>& points, double tol) {
  require(tol > 0.0, Errc::input, "cluster tolerance must be positive");
  ClusterSet cs;
  cs.tolerance = tol;
  for (const auto& p : points) {
    const CVec q = projective_normalize(p);
    bool placed = false;
    for (int k = 0; k < cs.count(); ++k) {
      if (cs.representatives[static_cast<std::size_t>(k)].size() == q.size() &&
          projective_distance(cs.representatives[static_cast<std::size_t>(k)], q) <= tol) {
        cs.multiplicities[static_cast<std::size_t>(k)] += 1;
        placed = true;
        break;
      }
    }
    if (!placed) {
      cs.representatives.push_back(q);
      cs.multiplicities.push_back(1);
    }
  }
  return cs;
}

}  // namespace scrolllab::num
