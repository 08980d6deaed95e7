#include "scrolllab/num/elim.hpp"

#include <algorithm>
#include <cmath>

#include "scrolllab/num/cluster.hpp"
#include "scrolllab/num/roots.hpp"

namespace scrolllab::num {

// Substitute a numeric value for one variable; the variable count is kept
// so chart and ambient indices stay aligned.
static CPoly fix_variable(const CPoly& f, int var, Complex value) {
  CPoly out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    Complex scaled = c;
    for (int k = 0; k < e[var]; ++k) scaled *= value;
    exact::Exponents r = e;
    r[var] = 0;
    out.add_term(std::move(r), scaled);
  }
  return out;
}

double unipoly_max_abs(const UniPoly& p) {
  double m = 0.0;
  for (const auto& c : p) m = std::max(m, std::abs(c));
  return m;
}

void unipoly_trim(UniPoly& p, double rel_eps) {
  const double m = unipoly_max_abs(p);
  while (!p.empty() && std::abs(p.back()) <= rel_eps * m) p.pop_back();
}

namespace {

// inverse DFT on K nodes exp(2*pi*i*j/K): recovers coefficients exactly for
// degree < K (up to roundoff)
UniPoly inverse_dft(const std::vector<Complex>& values) {
  const int k = static_cast<int>(values.size());
  UniPoly coeffs(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c) {
    Complex acc(0.0, 0.0);
    for (int j = 0; j < k; ++j) {
      const double ang = -2.0 * M_PI * c * j / k;
      acc += values[static_cast<std::size_t>(j)] * Complex(std::cos(ang), std::sin(ang));
    }
    coeffs[static_cast<std::size_t>(c)] = acc / static_cast<double>(k);
  }
  return coeffs;
}

Complex dft_node(int j, int k) {
  const double ang = 2.0 * M_PI * j / k;
  return {std::cos(ang), std::sin(ang)};
}

}  // namespace

UniPoly restrict_to_segment(const CPoly& form, const CVec& base, const CVec& dir) {
  const int deg = std::max(form.total_degree(), 0);
  const int k = deg + 1;
  require(base.size() == dir.size() && static_cast<int>(base.size()) == form.nvars(), Errc::dimension,
          "restrict_to_segment: dimension mismatch");
  std::vector<Complex> values(static_cast<std::size_t>(k));
  std::vector<Complex> pt(static_cast<std::size_t>(form.nvars()));
  for (int j = 0; j < k; ++j) {
    const Complex t = dft_node(j, k);
    for (int i = 0; i < form.nvars(); ++i) pt[static_cast<std::size_t>(i)] = base[i] + t * dir[i];
    values[static_cast<std::size_t>(j)] = form.eval_complex(pt);
  }
  UniPoly out = inverse_dft(values);
  return out;
}

UniPoly resultant_bivariate(const CPoly& p, const CPoly& q, int elim_var, int keep_var) {
  const int dp = p.degree_in(elim_var);
  const int dq = q.degree_in(elim_var);
  require(dp >= 1 && dq >= 1, Errc::input, "resultant_bivariate: positive degree needed in eliminated variable");

  const auto pc = p.coeffs_in(elim_var);
  const auto qc = q.coeffs_in(elim_var);
  auto keep_deg = [&](const std::vector<CPoly>& cs) {
    int d = 0;
    for (const auto& c : cs) d = std::max(d, c.degree_in(keep_var));
    return d;
  };
  const int mp = keep_deg(pc);
  const int mq = keep_deg(qc);
  const int bound = dq * mp + dp * mq;  // degree bound for the determinant
  const int k = bound + 1;
  const int n = dp + dq;

  // dense coefficient tables in keep_var for every Sylvester entry source
  auto dense = [&](const CPoly& c) {
    UniPoly u(static_cast<std::size_t>(std::max(c.degree_in(keep_var) + 1, 1)), Complex(0.0, 0.0));
    for (const auto& [e, v] : c.terms()) u[static_cast<std::size_t>(e[keep_var])] += v;
    return u;
  };
  std::vector<UniPoly> pd, qd;
  for (const auto& c : pc) pd.push_back(dense(c));
  for (const auto& c : qc) qd.push_back(dense(c));

  std::vector<Complex> values(static_cast<std::size_t>(k));
  Eigen::MatrixXcd m(n, n);
  for (int j = 0; j < k; ++j) {
    const Complex t = dft_node(j, k);
    auto eval_dense = [&](const UniPoly& u) {
      Complex acc(0.0, 0.0);
      for (auto it = u.rbegin(); it != u.rend(); ++it) acc = acc * t + *it;
      return acc;
    };
    m.setZero();
    for (int r = 0; r < dq; ++r)
      for (int s = 0; s <= dp; ++s) m(r, r + s) = eval_dense(pd[static_cast<std::size_t>(dp - s)]);
    for (int r = 0; r < dp; ++r)
      for (int s = 0; s <= dq; ++s) m(dq + r, r + s) = eval_dense(qd[static_cast<std::size_t>(dq - s)]);
    values[static_cast<std::size_t>(j)] = m.determinant();
  }
  UniPoly out = inverse_dft(values);
  unipoly_trim(out);
  return out;
}

BivariatePair::BivariatePair(CPoly p_in, CPoly q_in, int a, int b)
    : p(std::move(p_in)), q(std::move(q_in)), var_a(a), var_b(b) {
  pa = p.derivative(a);
  pb = p.derivative(b);
  qa = q.derivative(a);
  qb = q.derivative(b);
}

double relative_residual(const CPoly& f, std::span<const Complex> pt) {
  double scale = 0.0;
  std::vector<double> mags(pt.size());
  for (std::size_t i = 0; i < pt.size(); ++i) mags[i] = std::abs(pt[i]);
  for (const auto& [e, c] : f.terms()) {
    double m = std::abs(c);
    for (std::size_t i = 0; i < mags.size(); ++i)
      for (int k = 0; k < e[static_cast<int>(i)]; ++k) m *= mags[i];
    scale += m;
  }
  if (scale == 0.0) return 0.0;
  return std::abs(f.eval_complex(pt)) / scale;
}

double relative_residual(const CPoly& f, const CVec& pt) {
  std::vector<Complex> v(pt.data(), pt.data() + pt.size());
  return relative_residual(f, std::span<const Complex>(v));
}

namespace {
double rel_residual(const CPoly& f, std::span<const Complex> pt) { return relative_residual(f, pt); }
}  // namespace

double BivariatePair::residual(std::span<const Complex> point) const {
  return std::max(rel_residual(p, point), rel_residual(q, point));
}

double BivariatePair::polish(std::vector<Complex>& point, int max_iter) const {
  // Newton with a best-point memory: tangential intersections make the
  // Jacobian singular, so a step may degrade; never return worse than the
  // best iterate seen.
  std::vector<Complex> best = point;
  double best_res = residual(point);
  for (int it = 0; it < max_iter; ++it) {
    const Complex fp = p.eval_complex(point);
    const Complex fq = q.eval_complex(point);
    const Complex ja = pa.eval_complex(point), jb = pb.eval_complex(point);
    const Complex jc = qa.eval_complex(point), jd = qb.eval_complex(point);
    const Complex det = ja * jd - jb * jc;
    if (std::abs(det) < 1e-300) break;
    const Complex da = (fp * jd - fq * jb) / det;
    const Complex db = (ja * fq - jc * fp) / det;
    point[static_cast<std::size_t>(var_a)] -= da;
    point[static_cast<std::size_t>(var_b)] -= db;
    const double res = residual(point);
    if (res < best_res) {
      best_res = res;
      best = point;
    }
    if (std::abs(da) + std::abs(db) < 1e-15 * (1.0 + std::abs(point[static_cast<std::size_t>(var_a)]) +
                                               std::abs(point[static_cast<std::size_t>(var_b)])))
      break;
  }
  point = best;
  return best_res;
}

namespace {

// random well-conditioned complex 3x3 change of coordinates
Eigen::Matrix3cd random_rotation3(Rng& rng) {
  for (;;) {
    Eigen::Matrix3cd u;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) u(i, j) = rng.gaussian_complex();
    Eigen::JacobiSVD<Eigen::Matrix3cd> svd(u);
    const double cond = svd.singularValues()(0) / svd.singularValues()(2);
    if (std::isfinite(cond) && cond < 50.0) return u;
  }
}

CPoly rotate_form(const CPoly& f, const Eigen::Matrix3cd& u) {
  std::vector<Complex> s(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s[static_cast<std::size_t>(i) * 3 + j] = u(i, j);
  return f.linear_substitute(s);
}

CPoly normalized(CPoly f) {
  const double m = f.max_abs_coeff();
  if (m > 0.0) f *= Complex(1.0 / m, 0.0);
  return f;
}

}  // namespace

std::vector<CVec> solve_ternary_pair(const CPoly& p_in, const CPoly& q_in, Rng& rng, const TernarySolveOptions& opt) {
  require(p_in.nvars() == 3 && q_in.nvars() == 3, Errc::dimension, "solve_ternary_pair expects ternary forms");
  require(!p_in.is_zero() && !q_in.is_zero(), Errc::degenerate_input, "solve_ternary_pair on zero form");
  const CPoly p0 = normalized(p_in);
  const CPoly q0 = normalized(q_in);

  std::string last_issue = "no chart attempted";
  for (int attempt = 0; attempt < opt.chart_retries; ++attempt) {
    Rng chart_rng = rng.fork(1000 + static_cast<std::uint64_t>(attempt));
    const Eigen::Matrix3cd u = random_rotation3(chart_rng);
    const CPoly p = rotate_form(p0, u);
    const CPoly q = rotate_form(q0, u);

    // chart w2 = 1: substitute and keep (w0, w1) as unknowns
    const CPoly pc2 = fix_variable(p, 2, Complex(1, 0));
    const CPoly qc2 = fix_variable(q, 2, Complex(1, 0));
    UniPoly r;
    try {
      r = resultant_bivariate(pc2, qc2, 1, 0);
    } catch (const Error&) {
      last_issue = "resultant degenerated";
      continue;
    }
    if (r.size() <= 1) {
      last_issue = "constant resultant (no elimination information)";
      continue;
    }
    std::vector<RootResult> w0_roots;
    try {
      w0_roots = univariate_roots(r);
    } catch (const RootConvergenceError&) {
      last_issue = "root finder stalled on eliminant";
      continue;
    }

    BivariatePair sys(pc2, qc2, 0, 1);
    std::vector<CVec> found;
    for (const auto& rr : w0_roots) {
      // candidate w1 values from p restricted to this w0
      const auto pc = sys.p.coeffs_in(1);
      UniPoly restricted;
      for (const auto& c : pc) {
        std::vector<Complex> base = {rr.root, Complex(0, 0), Complex(1, 0)};
        restricted.push_back(c.eval_complex(base));
      }
      unipoly_trim(restricted);
      if (restricted.size() <= 1) continue;
      std::vector<RootResult> w1_roots;
      try {
        w1_roots = univariate_roots(restricted);
      } catch (const RootConvergenceError& e) {
        w1_roots = e.best;
      }
      for (const auto& w1 : w1_roots) {
        std::vector<Complex> cand = {rr.root, w1.root, Complex(1, 0)};
        const double res = sys.polish(cand, 40);
        if (res < opt.residual_tol) {
          Eigen::Vector3cd w(cand[0], cand[1], cand[2]);
          found.push_back(projective_normalize(u * w));
        }
      }
    }
    const ClusterSet cs = cluster_with_tolerance(found, opt.cluster_tol);
    if (cs.count() == 0) {
      last_issue = "no residual-clean solutions in chart";
      continue;
    }
    if (opt.expected_count > 0 && cs.count() != opt.expected_count && attempt + 1 < opt.chart_retries) {
      last_issue = "solution count " + std::to_string(cs.count()) + " != expected " +
                   std::to_string(opt.expected_count);
      continue;
    }
    return cs.representatives;
  }
  fail(Errc::elimination, "solve_ternary_pair: chart retries exhausted (" + last_issue + ")");
}

SingularPointSet plane_curve_singular_points(const CPoly& form_in, Rng& rng, double cluster_tol, double residual_tol) {
  require(form_in.nvars() == 3, Errc::dimension, "plane_curve_singular_points expects a ternary form");
  require(form_in.total_degree() >= 2, Errc::input, "curve degree must be >= 2 to have singular points");
  const CPoly form = normalized(form_in);

  // Candidate zeros of one chart's partial pair are recovered from a
  // high-degree interpolated eliminant, whose roots can be too noisy to
  // polish everywhere. Charts are cheap; take the union of the verified
  // singular points over a few random charts, with tight post-polish
  // acceptance so junk candidates never enter. Honest singular points
  // polish to near machine precision; near-singular artifacts of fitted
  // curves stall around 1e-9.
  const double accept_tol = std::min(residual_tol, 1e-11);
  std::vector<CVec> pts;
  std::vector<double> ress;
  int charts_done = 0;
  std::string last_issue = "no chart attempted";

  for (int attempt = 0; attempt < 5 && charts_done < 3; ++attempt) {
    Rng chart_rng = rng.fork(2000 + static_cast<std::uint64_t>(attempt));
    const Eigen::Matrix3cd u = random_rotation3(chart_rng);
    const CPoly f = rotate_form(form, u);
    const CPoly fful0 = f.derivative(0);
    const CPoly fful1 = f.derivative(1);
    const CPoly fful2 = f.derivative(2);
    if (fful0.is_zero() || fful1.is_zero()) {
      last_issue = "degenerate partials";
      continue;
    }
    const CPoly fc = fix_variable(f, 2, Complex(1, 0));
    const CPoly f0 = fix_variable(fful0, 2, Complex(1, 0));
    const CPoly f1 = fix_variable(fful1, 2, Complex(1, 0));
    const CPoly f2 = fix_variable(fful2, 2, Complex(1, 0));

    UniPoly r;
    try {
      r = resultant_bivariate(f0, f1, 1, 0);
    } catch (const Error&) {
      last_issue = "resultant degenerated";
      continue;
    }
    if (r.size() <= 1) {
      last_issue = "constant/empty eliminant";
      continue;
    }

    std::vector<RootResult> roots;
    try {
      roots = univariate_roots(r, 400);
    } catch (const RootConvergenceError& e) {
      roots = e.best;
    }

    BivariatePair sys(f0, f1, 0, 1);
    const auto pc = sys.p.coeffs_in(1);
    for (const auto& rr : roots) {
      UniPoly restricted;
      for (const auto& c : pc) {
        std::vector<Complex> base = {rr.root, Complex(0, 0), Complex(1, 0)};
        restricted.push_back(c.eval_complex(base));
      }
      unipoly_trim(restricted);
      if (restricted.size() <= 1) continue;
      std::vector<RootResult> w1s;
      try {
        w1s = univariate_roots(restricted);
      } catch (const RootConvergenceError& e) {
        w1s = e.best;
      }
      for (const auto& w1 : w1s) {
        std::vector<Complex> cand = {rr.root, w1.root, Complex(1, 0)};
        sys.polish(cand, 80);
        const double worst = std::max({rel_residual(f0, cand), rel_residual(f1, cand), rel_residual(f2, cand),
                                       rel_residual(fc, cand)});
        if (worst < accept_tol) {
          Eigen::Vector3cd w(cand[0], cand[1], cand[2]);
          pts.push_back(projective_normalize(u * w));
          ress.push_back(worst);
        }
      }
    }
    ++charts_done;
  }
  if (charts_done == 0)
    fail(Errc::elimination, "plane_curve_singular_points: chart retries exhausted (" + last_issue + ")");

  const ClusterSet cs = cluster_with_tolerance(pts, cluster_tol);
  SingularPointSet out;
  out.points = cs.representatives;
  out.charts_used = charts_done;
  out.residuals.assign(out.points.size(), 1.0);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t k = 0; k < out.points.size(); ++k) {
      if (projective_distance(pts[i], out.points[k]) <= cluster_tol) {
        out.residuals[k] = std::min(out.residuals[k], ress[i]);
        break;
      }
    }
  }
  return out;
}

}  // namespace scrolllab::num
