#include "scrolllab/scroll/triple.hpp"

#include <algorithm>
#include <cmath>

#include "scrolllab/num/cluster.hpp"
#include "scrolllab/num/elim.hpp"
#include "scrolllab/num/roots.hpp"

namespace scrolllab::scroll {

using num::UniPoly;

namespace {

// curve points over a chart parameter a: roots b of f(1, a, b)
std::vector<Complex> sheet_values(const ScrollScene& scene, Complex a) {
  std::vector<Complex> base = {Complex(1, 0), a, Complex(0, 0)};
  UniPoly restricted;
  for (const auto& c : scene.fc.coeffs_in(2)) restricted.push_back(c.eval_complex(base));
  num::unipoly_trim(restricted);
  std::vector<Complex> out;
  if (restricted.size() <= 1) return out;
  try {
    for (const auto& r : num::univariate_roots(restricted)) out.push_back(r.root);
  } catch (const num::RootConvergenceError& e) {
    for (const auto& r : e.best) out.push_back(r.root);
  }
  return out;
}

CVec chart_point(Complex a, Complex b) {
  CVec x(3);
  x[0] = Complex(1, 0);
  x[1] = a;
  x[2] = b;
  return num::projective_normalize(x);
}

double pair_level(const ScrollScene& scene, const CVec& u, const CVec& v) {
  return scene.g.polarized_residual(curve::veronese_lift(u), curve::veronese_lift(v));
}

struct TrackState {
  Complex a;
  Complex b;                   // sheet value
  CVec x;                      // curve point
  CVec yi, yj;                 // tracked partner positions
  Complex value = Complex(1, 0);
  bool valid = false;
};

// evaluate the tracked pair configuration at a new chart parameter; the
// sheet and both partners re-anchor by nearest distance (adaptive
// refinement across partner crossings)
TrackState evaluate_at(const ScrollScene& scene, const TrackState& prev, Complex a_new) {
  TrackState st;
  st.a = a_new;
  const auto sheets = sheet_values(scene, a_new);
  if (sheets.empty()) return st;
  int bi = 0;
  for (std::size_t i = 1; i < sheets.size(); ++i)
    if (std::abs(sheets[i] - prev.b) < std::abs(sheets[static_cast<std::size_t>(bi)] - prev.b)) bi = static_cast<int>(i);
  st.b = sheets[static_cast<std::size_t>(bi)];
  st.x = chart_point(a_new, st.b);

  std::vector<CVec> partners;
  try {
    partners = partner_points(scene, st.x);
  } catch (const Error&) {
    return st;
  }
  if (partners.size() < 2) return st;

  auto nearest = [&](const CVec& target, int exclude) {
    int best = -1;
    double d = 2.0;
    for (std::size_t i = 0; i < partners.size(); ++i) {
      if (static_cast<int>(i) == exclude) continue;
      const double di = num::projective_distance(partners[i], target);
      if (di < d) {
        d = di;
        best = static_cast<int>(i);
      }
    }
    return std::pair<int, double>(best, d);
  };
  const auto [ni, di] = nearest(prev.yi, -1);
  const auto [nj, dj] = nearest(prev.yj, ni);
  if (ni < 0 || nj < 0 || di > 0.5 || dj > 0.5) return st;
  st.yi = partners[static_cast<std::size_t>(ni)];
  st.yj = partners[static_cast<std::size_t>(nj)];

  const CVec zi = curve::veronese_lift(st.yi);
  const CVec zj = curve::veronese_lift(st.yj);
  const double scale = 2.0 * scene.g.gram().cwiseAbs().maxCoeff() * zi.norm() * zj.norm();
  st.value = scene.g.polarized(zi, zj) / scale;
  st.valid = true;
  return st;
}

}  // namespace

TripleScanReport triple_locus_scan(const ScrollScene& scene, const TripleScanConfig& cfg,
                                   const OcticSurface* octic) {
  require(cfg.resolution >= 16, Errc::input, "sweep resolution too small");
  require(cfg.detect_threshold > 0 && cfg.cluster_tol > 0, Errc::input, "bad scan tolerances");

  TripleScanReport rep;
  rep.config = cfg;

  // serpentine raster over the chart square; a tiny seeded offset dodges
  // alignment with curve symmetries
  Rng rng(cfg.seed);
  const double off_re = 1e-3 * static_cast<double>(rng.int_in(-500, 500));
  const double off_im = 1e-3 * static_cast<double>(rng.int_in(-500, 500));
  const int rows = std::max(4, static_cast<int>(std::floor(std::sqrt(static_cast<double>(cfg.resolution)))));
  const int cols = std::max(4, cfg.resolution / rows);
  const double step = 2.0 * cfg.box_halfwidth / (static_cast<double>(std::max(rows, cols)) - 1.0);

  struct Seedling {
    Complex a;
    Complex b;
    CVec yi, yj;
    double level;
    int sheet;
  };
  std::vector<Seedling> seeds;

  for (int r = 0; r < rows; ++r) {
    for (int c0 = 0; c0 < cols; ++c0) {
      const int c = (r % 2 == 0) ? c0 : (cols - 1 - c0);  // serpentine closed loop
      const Complex a(-cfg.box_halfwidth + step * c + off_re, -cfg.box_halfwidth + step * r + off_im);
      const auto sheets = sheet_values(scene, a);
      for (std::size_t s = 0; s < sheets.size(); ++s) {
        std::vector<CVec> partners;
        try {
          partners = partner_points(scene, chart_point(a, sheets[s]));
        } catch (const Error&) {
          continue;
        }
        for (std::size_t i = 0; i < partners.size(); ++i)
          for (std::size_t j = i + 1; j < partners.size(); ++j) {
            // near-coincident partners sit at ramification of the partner
            // cover where b(y, y) = 0 structurally; those dips are not
            // triangles
            if (num::projective_distance(partners[i], partners[j]) < 0.02) continue;
            const double lvl = pair_level(scene, partners[i], partners[j]);
            if (lvl < cfg.detect_threshold)
              seeds.push_back({a, sheets[s], partners[i], partners[j], lvl, static_cast<int>(s)});
          }
      }
    }
  }
  rep.seeds_opened = static_cast<int>(seeds.size());
  std::sort(seeds.begin(), seeds.end(), [](const Seedling& x, const Seedling& y) { return x.level < y.level; });

  std::vector<CVec> found_points;
  std::vector<CVec> found_params;
  std::vector<double> found_collision;

  std::vector<Complex> refined_at;  // spatial dedupe of refinement starts
  int refinements = 0;

  for (const auto& sd : seeds) {
    if (refinements >= cfg.max_refinements) break;
    bool near_refined = false;
    for (const auto& a : refined_at)
      if (std::abs(a - sd.a) < 0.9 * step) {
        near_refined = true;
        break;
      }
    if (near_refined) continue;
    refined_at.push_back(sd.a);
    ++refinements;

    TrackState st;
    st.a = sd.a;
    st.b = sd.b;
    st.yi = sd.yi;
    st.yj = sd.yj;
    st = evaluate_at(scene, st, sd.a);
    if (!st.valid) continue;

    // stage 1: derivative-free window bisection (3x3 grid shrink) down to
    // a small cell; robust across partner crossings
    double h = step;
    for (int round = 0; round < 8 && std::abs(st.value) > 1e-12; ++round) {
      TrackState best = st;
      for (int dr = -1; dr <= 1; ++dr)
        for (int dc = -1; dc <= 1; ++dc) {
          if (dr == 0 && dc == 0) continue;
          const TrackState cand = evaluate_at(scene, st, st.a + Complex(h * dc, h * dr));
          if (cand.valid && std::abs(cand.value) < std::abs(best.value)) best = cand;
        }
      if (num::projective_distance(best.x, st.x) < 1e-15)
        h *= 0.5;
      else
        st = best;
    }

    // stage 2: secant endgame on the analytic pair value
    bool converged = std::abs(st.value) < 1e-12;
    if (!converged) {
      TrackState prev = st;
      TrackState cur = evaluate_at(scene, st, st.a + Complex(0.35 * h, 0.2 * h));
      if (cur.valid) {
        for (int it = 0; it < 25 && cur.valid; ++it) {
          if (std::abs(cur.value) < 1e-12) {
            converged = true;
            break;
          }
          const Complex denom = cur.value - prev.value;
          if (std::abs(denom) < 1e-300) break;
          Complex a_next = cur.a - cur.value * (cur.a - prev.a) / denom;
          if (std::abs(a_next - cur.a) > 1.0)
            a_next = cur.a + (a_next - cur.a) / std::abs(a_next - cur.a);
          const TrackState next = evaluate_at(scene, cur, a_next);
          if (!next.valid) break;
          prev = cur;
          cur = next;
        }
        if (cur.valid && std::abs(cur.value) < 1e-10) {
          converged = true;
          st = cur;
        } else if (converged) {
          st = cur;
        }
      }
    }

    if (!converged || !st.valid) {
      if (sd.level < cfg.detect_threshold * 0.2)  // strong dips must resolve or be flagged
        rep.unresolved.push_back({sd.a, sd.sheet, sd.level, "window refinement did not converge"});
      continue;
    }
    ++rep.seeds_converged;

    // verify genuine concurrency of the three lines
    const CVec x_star = st.x;
    const CVec yi = st.yi;
    const CVec yj = st.yj;
    if (num::projective_distance(yi, yj) < 1e-3) continue;  // converged onto ramification
    try {
      const Line3 lx = scene.line_of(x_star);
      const auto oi = intersect_lines(lx, scene.line_of(yi), 1e-6);
      const auto oj = intersect_lines(lx, scene.line_of(yj), 1e-6);
      if (!oi || !oj) {
        rep.unresolved.push_back({st.a, sd.sheet, std::abs(st.value), "meets undefined at convergence"});
        continue;
      }
      const double coll = num::projective_distance(*oi, *oj);
      if (coll > std::max(cfg.cluster_tol, 1e-7) * 10) {
        // three pairwise-meeting lines that are coplanar, not concurrent:
        // a resolved non-triple; drop quietly
        continue;
      }
      found_points.push_back(*oi);
      found_params.push_back(x_star);
      found_collision.push_back(coll);
    } catch (const Error&) {
      rep.unresolved.push_back({st.a, sd.sheet, sd.level, "line extraction failed at convergence"});
    }
  }

  // cluster concurrency points; count distinct parameters per cluster
  const num::ClusterSet cs = num::cluster_with_tolerance(found_points, std::max(cfg.cluster_tol, 1e-5));
  for (int k = 0; k < cs.count(); ++k) {
    TripleCluster tc;
    tc.point = cs.representatives[static_cast<std::size_t>(k)];
    std::vector<CVec> params;
    for (std::size_t i = 0; i < found_points.size(); ++i) {
      if (num::projective_distance(found_points[i], tc.point) <= std::max(cfg.cluster_tol, 1e-5)) {
        tc.worst_collision = std::max(tc.worst_collision, found_collision[i]);
        bool new_param = true;
        for (const auto& p : params)
          if (num::projective_distance(p, found_params[i]) < 1e-4) new_param = false;
        if (new_param) params.push_back(found_params[i]);
      }
    }
    tc.parameter_count = static_cast<int>(params.size());
    if (octic) {
      const auto mc = multiplicity_along_curve(*octic, {tc.point}, 2, 1.0);
      tc.octic_order2_residual = mc.worst_residual;
    }
    rep.clusters.push_back(std::move(tc));
  }
  return rep;
}

}  // namespace scrolllab::scroll
