#include "scrolllab/scroll/double_curve.hpp"

#include <algorithm>

#include "scrolllab/num/cluster.hpp"
#include "scrolllab/num/elim.hpp"
#include "scrolllab/num/nullspace.hpp"
#include "scrolllab/num/roots.hpp"

namespace scrolllab::scroll {

using exact::CPoly;
using exact::Exponents;
using num::ClusterSet;
using num::UniPoly;

namespace {

CPoly fix_var(const CPoly& f, int var, Complex value) {
  CPoly out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    Complex scaled = c;
    for (int k = 0; k < e[var]; ++k) scaled *= value;
    Exponents r = e;
    r[var] = 0;
    out.add_term(std::move(r), scaled);
  }
  return out;
}

// All intersection points of the quartic with a conic, raw (one entry per
// recovered root, so multiplicities survive). Deterministic chart ladder:
// unit coordinate 2/1/0.
std::vector<CVec> solve_quartic_conic_raw(const CPoly& quartic, const CPoly& conic, double residual_tol) {
  std::vector<CVec> best;
  for (int chart = 2; chart >= 0; --chart) {
    const int keep = (chart + 1) % 3;
    const int elim = (chart + 2) % 3;
    const CPoly fq = fix_var(quartic, chart, Complex(1, 0));
    const CPoly fcn = fix_var(conic, chart, Complex(1, 0));
    if (fq.degree_in(elim) < 1 || fcn.degree_in(elim) < 1) continue;

    UniPoly elim_poly;
    try {
      elim_poly = num::resultant_bivariate(fq, fcn, elim, keep);
    } catch (const Error&) {
      continue;
    }
    num::unipoly_trim(elim_poly);
    if (elim_poly.size() <= 1) continue;

    std::vector<num::RootResult> roots;
    try {
      roots = num::univariate_roots(elim_poly);
    } catch (const num::RootConvergenceError& e) {
      roots = e.best;
    }

    num::BivariatePair sys(fq, fcn, keep, elim);
    std::vector<CVec> raw;
    for (const auto& rr : roots) {
      // back-substitute through the conic (degree <= 2 in elim)
      std::vector<Complex> base(3, Complex(0, 0));
      base[static_cast<std::size_t>(chart)] = Complex(1, 0);
      base[static_cast<std::size_t>(keep)] = rr.root;
      UniPoly restricted;
      for (const auto& c : fcn.coeffs_in(elim)) restricted.push_back(c.eval_complex(base));
      num::unipoly_trim(restricted);
      if (restricted.size() <= 1) continue;
      std::vector<num::RootResult> cands;
      try {
        cands = num::univariate_roots(restricted);
      } catch (const num::RootConvergenceError& e) {
        cands = e.best;
      }
      for (const auto& cd : cands) {
        std::vector<Complex> pt = base;
        pt[static_cast<std::size_t>(elim)] = cd.root;
        const double res = sys.polish(pt, 40);
        if (res < residual_tol) {
          CVec v(3);
          for (int i = 0; i < 3; ++i) v[i] = pt[static_cast<std::size_t>(i)];
          raw.push_back(num::projective_normalize(v));
        }
      }
    }
    if (raw.size() > best.size()) best = std::move(raw);
    if (best.size() == 8) break;  // full Bezout count recovered
  }
  require(!best.empty(), Errc::elimination, "quartic-conic intersection: all charts degenerated");
  return best;
}

}  // namespace

std::vector<CVec> partner_points(const ScrollScene& scene, const CVec& x, double cluster_tol) {
  const CVec xn = num::projective_normalize(x);
  const auto raw = solve_quartic_conic_raw(scene.fc, scene.partner_conic(xn), 1e-7);
  const ClusterSet cs = num::cluster_with_tolerance(raw, cluster_tol);
  std::vector<CVec> partners;
  for (int k = 0; k < cs.count(); ++k) {
    const CVec& rep = cs.representatives[static_cast<std::size_t>(k)];
    if (num::projective_distance(rep, xn) <= 10 * cluster_tol) continue;
    partners.push_back(rep);
  }
  return partners;
}

PartnerSet double_curve_partners(const ScrollScene& scene, const CVec& x, double cluster_tol) {
  require(scene.g.rank() == 6, Errc::rank, "partners need rank(G) = 6");
  PartnerSet out;
  out.x = num::projective_normalize(x);
  require(num::relative_residual(scene.fc, out.x) < 1e-8, Errc::precondition,
          "partner base point is not on the curve");
  out.line_x = scene.line_of(out.x);

  const CPoly conic = scene.partner_conic(out.x);
  const auto raw = solve_quartic_conic_raw(scene.fc, conic, 1e-7);

  // distinct intersection points; the conic is tangent to C at x, so the
  // Bezout count 8 leaves 6 residual partners and multiplicity 2 at x for
  // a general base point
  const ClusterSet cs = num::cluster_with_tolerance(raw, cluster_tol);
  for (int k = 0; k < cs.count(); ++k) {
    const CVec& rep = cs.representatives[static_cast<std::size_t>(k)];
    if (num::projective_distance(rep, out.x) <= 10 * cluster_tol) continue;
    out.partners.push_back(rep);
  }
  out.x_multiplicity = 8 - static_cast<int>(out.partners.size());
  out.tangency_flag = (out.partners.size() != 6);

  for (const auto& y : out.partners) {
    Line3 ly = scene.line_of(y);
    out.worst_pair_residual =
        std::max(out.worst_pair_residual,
                 scene.g.polarized_residual(curve::veronese_lift(out.x), curve::veronese_lift(y)));
    auto o = intersect_lines(out.line_x, ly, 1e-6);
    if (!o) {
      out.tangency_flag = true;
      out.meets.push_back(CVec::Zero(4));
    } else {
      out.meets.push_back(*o);
    }
    out.partner_lines.push_back(std::move(ly));
  }
  return out;
}

std::vector<int> meet_cluster_profile(const ScrollScene& scene, int samples, std::uint64_t seed,
                                      double cluster_tol) {
  const curve::CurveSample cs = curve::sample_curve_points(scene.f, samples, seed);
  std::vector<int> profile;
  for (const auto& x : cs.points) {
    try {
      const PartnerSet ps = double_curve_partners(scene, x, cluster_tol);
      if (ps.tangency_flag) continue;
      std::vector<CVec> meets;
      for (const auto& o : ps.meets)
        if (o.norm() > 0.0) meets.push_back(o);
      profile.push_back(num::cluster_with_tolerance(meets, 1e-4).count());
    } catch (const Error&) {
      continue;  // skip fragile samples; the profile is a vote
    }
  }
  return profile;
}

PlaneCountReport double_curve_plane_count(const ScrollScene& scene, const CVec& plane, std::uint64_t seed,
                                          double cluster_tol, double nullspace_tol) {
  require(plane.size() == 4, Errc::dimension, "plane covector must have 4 entries");

  // guard: the multiplicity >= 3 strata have a different double-locus
  // accounting and are rejected here
  {
    const auto profile = meet_cluster_profile(scene, 6, seed ^ 0x9e3779b9ULL, cluster_tol);
    int low = 0;
    for (int k : profile)
      if (k <= 3) ++low;
    require(profile.empty() || low * 2 <= static_cast<int>(profile.size()), Errc::precondition,
            "double_curve_plane_count: input looks like a multiplicity >= 3 scroll (case a/b)");
  }

  PlaneCountReport rep;
  rep.seed = seed;
  rep.cluster_tol = cluster_tol;

  // plane coordinates: bilinear nullspace basis of the covector
  CMat hrow(1, 4);
  for (int i = 0; i < 4; ++i) hrow(0, i) = plane[i];
  const auto basis = num::numeric_nullspace(hrow, 1e-12);
  require(basis.size() == 3, Errc::rank, "plane basis construction failed");
  CMat u(4, 3);
  for (int j = 0; j < 3; ++j) u.col(j) = basis[static_cast<std::size_t>(j)];
  const Eigen::ColPivHouseholderQR<CMat> u_qr(u);
  const auto to_plane_coords = [&](const CVec& z4) { return num::projective_normalize(u_qr.solve(z4)); };

  // section samples
  const int n_fit = 110, n_val = 30;
  const curve::CurveSample fit_sample = curve::sample_curve_points(scene.f, n_fit + n_val, seed);
  std::vector<CVec> sec;
  sec.reserve(fit_sample.points.size());
  for (const auto& x : fit_sample.points) sec.push_back(to_plane_coords(line_plane_intersection(scene.line_of(x), plane)));

  // implicitize the degree-8 plane section
  const auto monomials = exact::monomials_of_degree(3, 8);  // 45
  CMat m(n_fit, static_cast<int>(monomials.size()));
  for (int r = 0; r < n_fit; ++r)
    for (std::size_t c = 0; c < monomials.size(); ++c) {
      Complex v(1, 0);
      for (int i = 0; i < 3; ++i)
        for (int e = 0; e < monomials[c][i]; ++e) v *= sec[static_cast<std::size_t>(r)][i];
      m(r, static_cast<int>(c)) = v;
    }
  const auto null_basis = num::numeric_nullspace(m, nullspace_tol);
  require(!null_basis.empty(), Errc::fit, "plane-section fit: nullity 0 (insufficient samples)");
  require(null_basis.size() == 1, Errc::fit, "plane-section fit: nullity >= 2 (degenerate section)");

  CPoly section(3);
  {
    CVec v = null_basis[0];
    int lead = 0;
    for (int i = 1; i < v.size(); ++i)
      if (std::abs(v[i]) > std::abs(v[lead])) lead = i;
    v /= v[lead];
    for (std::size_t i = 0; i < monomials.size(); ++i)
      if (std::abs(v[static_cast<int>(i)]) > 0.0) section.add_term(monomials[i], v[static_cast<int>(i)]);
  }
  for (int r = n_fit; r < n_fit + n_val; ++r)
    rep.fit_residual = std::max(rep.fit_residual, num::relative_residual(section, sec[static_cast<std::size_t>(r)]));
  require(rep.fit_residual < 1e-7, Errc::fit, "plane-section fit failed validation");

  // nodes of the section = double-curve points on the plane
  Rng rng(seed);
  Rng node_rng = rng.fork(11);
  const auto sing = num::plane_curve_singular_points(section, node_rng, cluster_tol);
  rep.count = static_cast<int>(sing.points.size());

  // resolve each node to its (x, y) pair and verify the defining system
  const auto s_forms = symbolic_plane_section(scene.frame, scene.swapped, plane);
  for (const auto& w : sing.points) {
    const CVec w4 = num::projective_normalize(u * w);
    int i0 = 0;
    for (int i = 1; i < 4; ++i)
      if (std::abs(w4[i]) > std::abs(w4[i0])) i0 = i;
    int i1 = (i0 + 1) % 4;
    for (int i = 0; i < 4; ++i)
      if (i != i0 && std::abs(w4[i]) > std::abs(w4[i1])) i1 = i;
    const CPoly minor_a = s_forms[static_cast<std::size_t>(i0)] * w4[i1] - s_forms[static_cast<std::size_t>(i1)] * w4[i0];

    std::vector<CVec> xs;
    try {
      num::TernarySolveOptions opt;
      opt.cluster_tol = cluster_tol;
      opt.residual_tol = 1e-7;
      Rng pair_rng = rng.fork(100 + static_cast<std::uint64_t>(&w - sing.points.data()));
      const auto cands = num::solve_ternary_pair(scene.fc, minor_a, pair_rng, opt);
      for (const auto& cx : cands) {
        // the full parallelism condition: every remaining minor vanishes
        bool on_line = true;
        for (int i = 0; i < 4 && on_line; ++i) {
          if (i == i0) continue;
          const CPoly mi = s_forms[static_cast<std::size_t>(i0)] * w4[i] - s_forms[static_cast<std::size_t>(i)] * w4[i0];
          if (num::relative_residual(mi, cx) > 1e-6) on_line = false;
        }
        if (on_line) xs.push_back(cx);
      }
    } catch (const Error&) {
      continue;
    }
    if (xs.size() != 2) continue;

    // system residuals: f(x), f(y) hold by construction; check b and H o
    const double b_res = scene.g.polarized_residual(curve::veronese_lift(xs[0]), curve::veronese_lift(xs[1]));
    const auto o = intersect_lines(scene.line_of(xs[0]), scene.line_of(xs[1]), 1e-6);
    if (!o) continue;
    Complex hdot(0, 0);  // bilinear pairing, no conjugation
    for (int i = 0; i < 4; ++i) hdot += plane[i] * (*o)[i];
    const double h_res = std::abs(hdot) / (plane.norm() * o->norm());
    const double worst = std::max(b_res, h_res);
    rep.worst_system_residual = std::max(rep.worst_system_residual, worst);
    if (worst < 1e-6) {
      rep.verified += 1;
      rep.ordered_pair_count += 2;
    }
  }
  return rep;
}

}  // namespace scrolllab::scroll
