#include "scrolllab/scroll/linemap.hpp"

#include "scrolllab/num/elim.hpp"

namespace scrolllab::scroll {

using exact::CPoly;

CVec plucker_of_points(const CVec& a, const CVec& b) {
  require(a.size() == 4 && b.size() == 4, Errc::dimension, "plucker_of_points expects P^3 points");
  CVec p(6);
  auto m = [&](int i, int j) { return a[i] * b[j] - a[j] * b[i]; };
  p[0] = m(0, 1);
  p[1] = m(0, 2);
  p[2] = m(0, 3);
  p[3] = m(1, 2);
  p[4] = m(1, 3);
  p[5] = m(2, 3);
  return p;
}

Complex plucker_quadratic(const CVec& p) { return p[0] * p[5] - p[1] * p[4] + p[2] * p[3]; }

double plucker_residual(const CVec& p) {
  const double scale = p.squaredNorm();
  if (scale == 0.0) return 0.0;
  return std::abs(plucker_quadratic(p)) / scale;
}

CMat primal_plucker_matrix(const CVec& p) {
  CMat m = CMat::Zero(4, 4);
  m(0, 1) = p[0];
  m(0, 2) = p[1];
  m(0, 3) = p[2];
  m(1, 2) = p[3];
  m(1, 3) = p[4];
  m(2, 3) = p[5];
  m -= CMat(m.transpose()).eval();
  return m;
}

CMat dual_plucker_matrix(const CVec& p) {
  // complementary index pairing with signs so that primal * dual vanishes
  // on the quadric
  CMat m = CMat::Zero(4, 4);
  m(0, 1) = p[5];
  m(0, 2) = -p[4];
  m(0, 3) = p[3];
  m(1, 2) = p[2];
  m(1, 3) = -p[1];
  m(2, 3) = p[0];
  m -= CMat(m.transpose()).eval();
  return m;
}

CVec ruling_swap(const CVec& p) {
  CVec q(6);
  q[0] = p[5];
  q[1] = -p[4];
  q[2] = p[3];
  q[3] = p[2];
  q[4] = -p[1];
  q[5] = p[0];
  return q;
}

Line3 line_from_plucker(const CVec& p_in) {
  const CVec p = num::projective_normalize(p_in);
  require(plucker_residual(p) < 1e-6, Errc::input, "line_from_plucker: vector violates the Plucker relation");
  const CMat m = primal_plucker_matrix(p);
  // columns of the primal matrix are the meets with the coordinate planes;
  // take the two that span best
  int ia = 0;
  double best = -1.0;
  for (int j = 0; j < 4; ++j)
    if (m.col(j).norm() > best) {
      best = m.col(j).norm();
      ia = j;
    }
  const CVec a = m.col(ia);
  int ib = -1;
  double best_perp = -1.0;
  for (int j = 0; j < 4; ++j) {
    if (j == ia) continue;
    CVec c = m.col(j);
    c -= (a.adjoint() * c)(0) / a.squaredNorm() * a;
    if (c.norm() > best_perp) {
      best_perp = c.norm();
      ib = j;
    }
  }
  require(best_perp > 1e-10 * best, Errc::input, "line_from_plucker: rank-1 matrix (not a line)");
  CVec b = m.col(ib);
  Line3 line;
  line.point_a = num::projective_normalize(a);
  line.point_b = num::projective_normalize(b - (a.adjoint() * b)(0) / a.squaredNorm() * a);
  line.plucker = p;
  // spanning pair must reproduce the Plucker vector
  const CVec back = num::projective_normalize(plucker_of_points(line.point_a, line.point_b));
  require(num::projective_distance(back, p) < 1e-8, Errc::input,
          "line_from_plucker: spanning pair does not reproduce the Plucker vector");
  return line;
}

Line3 line_from_points(const CVec& a, const CVec& b) {
  Line3 l;
  l.point_a = num::projective_normalize(a);
  l.point_b = num::projective_normalize(b);
  require(num::projective_distance(l.point_a, l.point_b) > 1e-10, Errc::input,
          "line_from_points: coincident points");
  l.plucker = num::projective_normalize(plucker_of_points(l.point_a, l.point_b));
  return l;
}

std::optional<CVec> intersect_lines(const Line3& l1, const Line3& l2, double tol) {
  if (num::projective_distance(l1.plucker, l2.plucker) < 1e-12) return std::nullopt;  // same line
  const CMat dual2 = dual_plucker_matrix(l2.plucker);
  // plane through l2 and a probe point not on l2
  CVec w;
  double best = -1.0;
  for (int j = 0; j < 4; ++j) {
    const CVec cand = dual2.col(j);
    if (cand.norm() > best) {
      best = cand.norm();
      w = cand;
    }
  }
  if (best <= 0.0) return std::nullopt;
  const CVec o = primal_plucker_matrix(l1.plucker) * w;
  if (o.norm() < 1e-12) return std::nullopt;
  const CVec on = num::projective_normalize(o);
  // o must lie on l2 as well: the dual matrix annihilates points of the line
  const double mem = (dual2 * on).norm() / dual2.norm();
  if (mem > tol) return std::nullopt;
  return on;
}

CVec line_plane_intersection(const Line3& l, const CVec& plane) {
  const CVec o = primal_plucker_matrix(l.plucker) * plane;
  require(o.norm() > 1e-12, Errc::input, "line lies in the plane");
  return num::projective_normalize(o);
}

LineMap build_line_map(const QuadricForm6& g, const PlaneQuartic& f, int n, std::uint64_t seed,
                       bool swap_ruling, double residual_tol) {
  require(g.rank() == 6, Errc::rank, "line map requires rank(G) = 6");
  require(membership_residual(g, f) < 1e-8, Errc::precondition,
          "quadric is not in the span of quadrics through the bicanonical curve");

  LineMap map;
  map.frame = isotropic_frame(g);
  map.swapped = swap_ruling;
  map.seed = seed;

  const curve::CurveSample sample = curve::sample_curve_points(f, n, seed);
  for (std::size_t i = 0; i < sample.points.size(); ++i) {
    LineMapEntry e;
    e.x = sample.points[i];
    e.lift = curve::veronese_lift(e.x);
    e.on_g_res = g.quadratic_residual(e.lift);
    require(e.on_g_res < 1e-7, Errc::precondition, "lifted sample is not on G");
    CVec w = map.frame.inverse * e.lift;
    if (swap_ruling) w = ruling_swap(w);
    e.plucker = num::projective_normalize(w);
    e.plucker_res = plucker_residual(e.plucker);
    require(e.plucker_res < residual_tol, Errc::rank,
            "Plucker residual breach in line map (frame error)");
    e.line = line_from_plucker(e.plucker);
    map.entries.push_back(std::move(e));
  }
  return map;
}

std::array<CPoly, 6> symbolic_plucker(const IsotropicFrame& frame, bool swapped) {
  // lift monomials in ambient order, then apply the inverse frame rows
  std::array<CPoly, 6> lift;
  for (int k = 0; k < 6; ++k) {
    exact::Exponents e = {curve::kVeroneseExponents[static_cast<std::size_t>(k)][0],
                          curve::kVeroneseExponents[static_cast<std::size_t>(k)][1],
                          curve::kVeroneseExponents[static_cast<std::size_t>(k)][2]};
    lift[static_cast<std::size_t>(k)] = CPoly::monomial(e, Complex(1.0, 0.0));
  }
  std::array<CPoly, 6> pl;
  for (int r = 0; r < 6; ++r) {
    CPoly acc(3);
    for (int c = 0; c < 6; ++c) acc += lift[static_cast<std::size_t>(c)] * frame.inverse(r, c);
    pl[static_cast<std::size_t>(r)] = std::move(acc);
  }
  if (swapped) {
    std::array<CPoly, 6> sw;
    sw[0] = pl[5];
    sw[1] = -pl[4];
    sw[2] = pl[3];
    sw[3] = pl[2];
    sw[4] = -pl[1];
    sw[5] = pl[0];
    return sw;
  }
  return pl;
}

std::array<CPoly, 4> symbolic_plane_section(const IsotropicFrame& frame, bool swapped, const CVec& plane) {
  const auto pl = symbolic_plucker(frame, swapped);
  // primal Plucker matrix times the plane covector, expanded symbolically
  std::array<CPoly, 4> s;
  // rows of the primal matrix in terms of (p01,p02,p03,p12,p13,p23)
  // row 0: (0, p01, p02, p03) ; row 1: (-p01, 0, p12, p13)
  // row 2: (-p02, -p12, 0, p23) ; row 3: (-p03, -p13, -p23, 0)
  s[0] = pl[0] * plane[1] + pl[1] * plane[2] + pl[2] * plane[3];
  s[1] = -(pl[0] * plane[0]) + pl[3] * plane[2] + pl[4] * plane[3];
  s[2] = -(pl[1] * plane[0]) - pl[3] * plane[1] + pl[5] * plane[3];
  s[3] = -(pl[2] * plane[0]) - pl[4] * plane[1] - pl[5] * plane[2];
  return s;
}

}  // namespace scrolllab::scroll
