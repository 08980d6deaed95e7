#include "scrolllab/scroll/fit.hpp"

#include "scrolllab/num/elim.hpp"
#include "scrolllab/num/nullspace.hpp"

namespace scrolllab::scroll {

using exact::CPoly;
using exact::Exponents;

namespace {

std::vector<CVec> sample_line_points(const std::vector<Line3>& lines, int pts_per_line, Rng& rng) {
  std::vector<CVec> pts;
  pts.reserve(lines.size() * static_cast<std::size_t>(pts_per_line));
  for (const auto& line : lines) {
    for (int k = 0; k < pts_per_line; ++k) {
      const Complex t = rng.gaussian_complex();
      pts.push_back(num::projective_normalize(line.point_a + t * line.point_b));
    }
  }
  return pts;
}

CMat monomial_matrix(const std::vector<CVec>& pts, const std::vector<Exponents>& monomials) {
  CMat m(static_cast<int>(pts.size()), static_cast<int>(monomials.size()));
  for (std::size_t r = 0; r < pts.size(); ++r) {
    const CVec& z = pts[r];
    for (std::size_t c = 0; c < monomials.size(); ++c) {
      Complex v(1.0, 0.0);
      for (int i = 0; i < static_cast<int>(z.size()); ++i)
        for (int e = 0; e < monomials[c][i]; ++e) v *= z[i];
      m(static_cast<int>(r), static_cast<int>(c)) = v;
    }
  }
  return m;
}

int nullity_at_degree(const std::vector<CVec>& pts, int degree, double tol) {
  const auto monomials = exact::monomials_of_degree(4, degree);
  if (pts.size() < 2 * monomials.size()) return -1;  // not enough rows to trust
  const CMat m = monomial_matrix(pts, monomials);
  return static_cast<int>(m.cols()) - num::numeric_rank(m, tol);
}

}  // namespace

FitOutcome fit_scroll(const std::vector<Line3>& lines, int pts_per_line, std::uint64_t seed,
                      double nullspace_tol, double validation_tol) {
  require(static_cast<int>(lines.size()) >= 40, Errc::precondition, "fit_scroll needs at least 40 lines");
  require(pts_per_line >= 5, Errc::precondition, "fit_scroll needs at least 5 points per line");

  Rng rng(seed);
  Rng fit_rng = rng.fork(1);
  Rng val_rng = rng.fork(2);

  const auto monomials = exact::monomials_of_degree(4, 8);  // 165
  const auto pts = sample_line_points(lines, pts_per_line, fit_rng);
  const CMat m = monomial_matrix(pts, monomials);
  const auto basis = num::numeric_nullspace(m, nullspace_tol);

  if (basis.empty()) fail(Errc::fit, "fit_scroll: nullity 0 at degree 8 (insufficient samples)");
  if (basis.size() >= 2) {
    FitOutcome out;
    ScrollDegeneration deg;
    deg.nullity_deg8 = static_cast<int>(basis.size());
    deg.nullity_deg2 = nullity_at_degree(pts, 2, nullspace_tol);
    deg.nullity_deg4 = nullity_at_degree(pts, 4, nullspace_tol);
    out.degeneration = deg;
    return out;
  }

  OcticSurface oct;
  oct.seed = seed;
  oct.nullspace_tol = nullspace_tol;
  // normalize: largest coefficient becomes exactly 1 (deterministic tie:
  // first index of maximal magnitude)
  CVec v = basis[0];
  int lead = 0;
  for (int i = 1; i < v.size(); ++i)
    if (std::abs(v[i]) > std::abs(v[lead])) lead = i;
  v /= v[lead];
  oct.coeffs.assign(v.data(), v.data() + v.size());
  oct.form = CPoly(4);
  for (std::size_t i = 0; i < monomials.size(); ++i)
    if (std::abs(oct.coeffs[i]) > 0.0) oct.form.add_term(monomials[i], oct.coeffs[i]);

  // validation on a disjoint sample set
  const auto fresh = sample_line_points(lines, 2, val_rng);
  double worst = 0.0;
  for (const auto& z : fresh) worst = std::max(worst, num::relative_residual(oct.form, z));
  require(worst < validation_tol, Errc::fit,
          "fit_scroll: validation residual " + std::to_string(worst) + " exceeds tolerance");
  oct.validation_residual = worst;

  FitOutcome out;
  out.octic = std::move(oct);
  return out;
}

num::UniPoly restrict_octic_to_line(const OcticSurface& f, const Line3& line) {
  return num::restrict_to_segment(f.form, line.point_a, line.point_b);
}

MultiplicityCheck multiplicity_along_curve(const OcticSurface& f, const std::vector<CVec>& samples, int order,
                                           double tol) {
  require(order >= 0, Errc::input, "derivative order must be >= 0");
  MultiplicityCheck out;
  out.order = order;

  // all derivative polynomials up to total order (one per multi-index)
  std::vector<CPoly> derivs;
  for (int k = 0; k <= order; ++k)
    for (const auto& mi : exact::monomials_of_degree(4, k)) {
      CPoly d = f.form;
      for (int v = 0; v < 4 && !d.is_zero(); ++v)
        for (int c = 0; c < mi[v]; ++c) d = d.derivative(v);
      if (!d.is_zero()) derivs.push_back(std::move(d));
    }

  out.per_sample_worst.reserve(samples.size());
  for (const auto& z : samples) {
    double w = 0.0;
    for (const auto& g : derivs) w = std::max(w, num::relative_residual(g, z));
    out.per_sample_worst.push_back(w);
    out.worst_residual = std::max(out.worst_residual, w);
  }
  out.pass = out.worst_residual < tol;
  return out;
}

int multiplicity_profile(const OcticSurface& f, const std::vector<CVec>& samples, int max_order, double tol) {
  int profile = 0;
  for (int k = 0; k <= max_order; ++k) {
    if (multiplicity_along_curve(f, samples, k, tol).pass)
      profile = k + 1;
    else
      break;
  }
  return profile;
}

}  // namespace scrolllab::scroll
