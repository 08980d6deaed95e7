#pragma once

#include <optional>
#include <vector>

#include "scrolllab/exact/multipoly.hpp"
#include "scrolllab/num/complexvec.hpp"
#include "scrolllab/rng.hpp"

namespace scrolllab::num {

using exact::CPoly;
using exact::RatPoly;

// Dense univariate complex polynomial; index = power.
using UniPoly = std::vector<Complex>;

double unipoly_max_abs(const UniPoly& p);
void unipoly_trim(UniPoly& p, double rel_eps = 1e-12);

// Coefficients of t -> F(base + t * dir) recovered by evaluation at roots
// of unity (exact for the known degree bound).
UniPoly restrict_to_segment(const CPoly& form, const CVec& base, const CVec& dir);

// |f(pt)| scaled by sum |c_m| |pt^m|; the residual convention used across
// the project.
double relative_residual(const CPoly& f, std::span<const Complex> pt);
double relative_residual(const CPoly& f, const CVec& pt);

// Sylvester resultant of two polynomials in two active variables,
// eliminating `elim_var`; the determinant is interpolated from scalar
// evaluations at roots of unity, so no polynomial-entry elimination is
// ever performed numerically.
UniPoly resultant_bivariate(const CPoly& p, const CPoly& q, int elim_var, int keep_var);

// One simultaneous Newton step target: a pair of polynomials in the same
// variable set with two designated unknowns (all other variables fixed by
// the chart embedding the caller chose).
struct BivariatePair {
  CPoly p, q;      // the system
  CPoly pa, pb;    // partials of p wrt the two unknowns
  CPoly qa, qb;    // partials of q
  int var_a, var_b;

  BivariatePair(CPoly p_in, CPoly q_in, int a, int b);

  // relative backward residual of the pair at a full point
  double residual(std::span<const Complex> point) const;

  // Newton-polish the two designated coordinates in place; returns the
  // final residual.
  double polish(std::vector<Complex>& point, int max_iter = 40) const;
};

struct TernarySolveOptions {
  double cluster_tol = 1e-6;
  double residual_tol = 1e-8;
  int chart_retries = 5;
  int expected_count = -1;  // -1 = unknown; used only for retry heuristics
};

// All projective common zeros of two coprime ternary forms. Uses a seeded
// random chart rotation, Sylvester elimination, Aberth root finding,
// Newton polish and projective clustering. Throws Errc::elimination after
// exhausting chart retries.
std::vector<CVec> solve_ternary_pair(const CPoly& p, const CPoly& q, Rng& rng, const TernarySolveOptions& opt);

struct SingularPointSet {
  std::vector<CVec> points;       // projective representatives (3-vectors)
  std::vector<double> residuals;  // worst relative partial residual per point
  int charts_used = 1;
};

// Singular points of the plane curve {form = 0}: common zeros of the two
// chart partials filtered by the form's own vanishing. The caller decides
// what count it expects.
SingularPointSet plane_curve_singular_points(const CPoly& form, Rng& rng, double cluster_tol,
                                             double residual_tol = 1e-6);

}  // namespace scrolllab::num
