#include "scrolllab/scroll/scene.hpp"

namespace scrolllab::scroll {

using exact::CPoly;

Line3 ScrollScene::line_of(const CVec& x) const { return line_from_plucker(plucker_of(x)); }

CVec ScrollScene::plucker_of(const CVec& x) const {
  const CVec z = curve::veronese_lift(x);
  CVec w = frame.inverse * z;
  if (swapped) w = ruling_swap(w);
  return num::projective_normalize(w);
}

CPoly ScrollScene::partner_conic(const CVec& x) const {
  const CVec z = curve::veronese_lift(x);
  const CVec gz = g.gram() * z;  // b(z, lift(y)) = 2 * sum_k (Gz)_k m_k(y)
  CPoly conic(3);
  for (int k = 0; k < 6; ++k) {
    exact::Exponents e = {curve::kVeroneseExponents[static_cast<std::size_t>(k)][0],
                          curve::kVeroneseExponents[static_cast<std::size_t>(k)][1],
                          curve::kVeroneseExponents[static_cast<std::size_t>(k)][2]};
    conic.add_term(e, 2.0 * gz[k]);
  }
  return conic;
}

ScrollScene make_scene(const QuadricForm6& g, const PlaneQuartic& f, bool swap_ruling) {
  require(g.rank() == 6, Errc::rank, "scene requires rank(G) = 6");
  require(f.certified_smooth(), Errc::precondition, "scene requires a certified-smooth quartic");
  require(membership_residual(g, f) < 1e-8, Errc::precondition,
          "quadric is not in the span of quadrics through the bicanonical curve");
  ScrollScene s;
  s.g = g;
  s.f = f;
  s.fc = exact::to_cpoly(f.form);
  s.frame = isotropic_frame(g);
  s.swapped = swap_ruling;
  s.plucker_forms = symbolic_plucker(s.frame, swap_ruling);
  return s;
}

}  // namespace scrolllab::scroll
