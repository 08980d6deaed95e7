#include "scrolllab/curve/quartic.hpp"

#include <array>

#include "scrolllab/exact/matrix.hpp"
#include "scrolllab/exact/resultant.hpp"
#include "scrolllab/num/elim.hpp"
#include "scrolllab/num/roots.hpp"

namespace scrolllab::curve {

using exact::RatMatrix;
using exact::to_cpoly;
using num::Complex;
using num::CVec;

std::string to_string(Smoothness s) {
  switch (s) {
    case Smoothness::certified_smooth:
      return "certified-smooth";
    case Smoothness::singular:
      return "singular";
    default:
      return "unknown";
  }
}

PlaneQuartic make_plane_quartic(RatPoly form) {
  require(form.nvars() == 3, Errc::input, "plane quartic must live in 3 variables");
  require(!form.is_zero(), Errc::input, "plane quartic form is zero");
  require(form.total_degree() == 4 && form.is_homogeneous(), Errc::input,
          "plane quartic must be homogeneous of degree exactly 4");
  PlaneQuartic q;
  q.form = std::move(form);
  return q;
}

namespace {

// coefficients of var^k with the other active variable set to 1
std::vector<Rational> dehomogenize(const RatPoly& p, int var, int deg_bound) {
  std::vector<Rational> c(static_cast<std::size_t>(deg_bound) + 1, Rational(0));
  for (const auto& [e, v] : p.terms()) {
    require(e[0] == 0, Errc::input, "dehomogenize expects the first variable eliminated");
    c[static_cast<std::size_t>(e[var])] += v;
  }
  return c;
}

std::optional<std::vector<Rational>> try_rational_witness(const CVec& w,
                                                          const std::array<RatPoly, 3>& partials) {
  // small-height rational reconstruction of each coordinate, then exact check
  auto reconstruct = [](Complex z) -> std::optional<Rational> {
    if (std::abs(z.imag()) > 1e-9) return std::nullopt;
    const double x = z.real();
    for (int den = 1; den <= 24; ++den) {
      const double scaled = x * den;
      const double rounded = std::round(scaled);
      if (std::abs(scaled - rounded) < 1e-7 && std::abs(rounded) < 1e15)
        return Rational(static_cast<long long>(rounded), den);
    }
    return std::nullopt;
  };
  // scale so the largest coordinate is 1 before reconstruction
  int lead = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(w[i]) > std::abs(w[lead])) lead = i;
  std::vector<Rational> cand(3);
  for (int i = 0; i < 3; ++i) {
    auto r = reconstruct(w[i] / w[lead]);
    if (!r) return std::nullopt;
    cand[static_cast<std::size_t>(i)] = *r;
  }
  for (const auto& p : partials) {
    if (p.eval(std::span<const Rational>(cand)) != 0) return std::nullopt;
  }
  return cand;
}

}  // namespace

SmoothnessCertificate check_smooth_quartic(const RatPoly& quartic_form, Rng& rng) {
  require(quartic_form.nvars() == 3 && quartic_form.total_degree() == 4 && quartic_form.is_homogeneous(),
          Errc::input, "smoothness check expects a homogeneous ternary quartic");

  const std::array<RatPoly, 3> partials = {quartic_form.derivative(0), quartic_form.derivative(1),
                                           quartic_form.derivative(2)};

  SmoothnessCertificate cert;

  // Degenerate partial pencil: a common factor of all partials is a whole
  // singular component; handle before the cascade. Witness: any projective
  // zero of the nonzero partials.
  {
    int nonzero = 0;
    for (const auto& p : partials)
      if (!p.is_zero()) ++nonzero;
    if (nonzero <= 1) {
      cert.status = Smoothness::singular;
      // e.g. x^4: partials (4x^3, 0, 0); the line x = 0 is singular
      for (int i = 0; i < 3; ++i) {
        std::vector<Rational> pt(3, Rational(0));
        pt[static_cast<std::size_t>(i)] = 1;
        bool all_zero = true;
        for (const auto& p : partials)
          if (p.eval(std::span<const Rational>(pt)) != 0) all_zero = false;
        if (all_zero) {
          cert.rational_witness = pt;
          CVec w(3);
          for (int j = 0; j < 3; ++j) w[j] = exact::to_complex(pt[static_cast<std::size_t>(j)]);
          cert.witness = w;
          break;
        }
      }
      return cert;
    }
  }

  for (int attempt = 0; attempt < 5; ++attempt) {
    cert.attempts = attempt + 1;
    Rng attempt_rng = rng.fork(31 + static_cast<std::uint64_t>(attempt));

    // random invertible rational frame
    RatMatrix s(3, 3);
    for (;;) {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s.at(i, j) = attempt_rng.rational(4, 2);
      if (exact::det(s) != 0) break;
    }
    std::vector<Rational> srm(9);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) srm[static_cast<std::size_t>(i) * 3 + j] = s.at(i, j);

    std::array<RatPoly, 3> h;
    bool generic = true;
    for (int i = 0; i < 3; ++i) {
      h[static_cast<std::size_t>(i)] = partials[static_cast<std::size_t>(i)].linear_substitute(srm);
      // the cascade needs full degree 3 in x0: reject frames where any
      // partial loses its x0^3 coefficient
      if (h[static_cast<std::size_t>(i)].coeff(exact::Exponents{3, 0, 0}) == 0) generic = false;
    }
    if (!generic) continue;

    const RatPoly r1 = exact::sylvester_resultant(h[0], h[1], 0);
    const RatPoly r2 = exact::sylvester_resultant(h[0], h[2], 0);
    if (r1.is_zero() || r2.is_zero()) {
      // the partials share a whole component; find a witness on it by
      // slicing with random lines
      Rng slice_rng = attempt_rng.fork(13);
      for (int t = 0; t < 20; ++t) {
        CVec base(3), dir(3);
        for (int i = 0; i < 3; ++i) {
          base[i] = slice_rng.gaussian_complex();
          dir[i] = slice_rng.gaussian_complex();
        }
        int first = 0;
        while (first < 3 && partials[static_cast<std::size_t>(first)].is_zero()) ++first;
        const auto restricted = num::restrict_to_segment(to_cpoly(partials[static_cast<std::size_t>(first)]), base, dir);
        auto trimmed = restricted;
        num::unipoly_trim(trimmed);
        if (trimmed.size() <= 1) continue;
        std::vector<num::RootResult> roots;
        try {
          roots = num::univariate_roots(trimmed);
        } catch (const num::RootConvergenceError& e) {
          roots = e.best;
        }
        for (const auto& rr : roots) {
          CVec w = base + rr.root * dir;
          bool all = true;
          for (const auto& p : partials)
            if (!p.is_zero() && num::relative_residual(to_cpoly(p), w) > 1e-8) all = false;
          if (all) {
            cert.status = Smoothness::singular;
            cert.witness = num::projective_normalize(w);
            cert.rational_witness = try_rational_witness(*cert.witness, partials);
            return cert;
          }
        }
      }
      continue;
    }

    const auto r1u = dehomogenize(r1, 1, 9);
    const auto r2u = dehomogenize(r2, 1, 9);
    const bool infinity_common = (r1u[9] == 0 && r2u[9] == 0);
    const Rational res = exact::resultant_univariate(r1u, r2u);
    if (res != 0 && !infinity_common) {
      cert.status = Smoothness::certified_smooth;
      return cert;
    }

    // candidate singular points: numeric common zeros of the first two
    // nonzero partials, filtered by the remaining ones
    try {
      std::vector<int> nz;
      for (int i = 0; i < 3; ++i)
        if (!partials[static_cast<std::size_t>(i)].is_zero()) nz.push_back(i);
      num::TernarySolveOptions opt;
      opt.cluster_tol = 1e-8;
      opt.residual_tol = 1e-8;
      Rng solve_rng = attempt_rng.fork(7);
      const auto sols = num::solve_ternary_pair(to_cpoly(partials[static_cast<std::size_t>(nz[0])]),
                                                to_cpoly(partials[static_cast<std::size_t>(nz[1])]), solve_rng, opt);
      for (const auto& w : sols) {
        bool rest_ok = true;
        for (std::size_t k = 2; k < nz.size(); ++k)
          if (num::relative_residual(to_cpoly(partials[static_cast<std::size_t>(nz[k])]), w) > 1e-7) rest_ok = false;
        if (rest_ok) {
          cert.status = Smoothness::singular;
          cert.witness = w;
          cert.rational_witness = try_rational_witness(w, partials);
          return cert;
        }
      }
    } catch (const Error&) {
      // fall through to another frame
    }
  }

  cert.status = Smoothness::unknown;
  return cert;
}

PlaneQuartic certified_quartic(RatPoly form, Rng& rng) {
  PlaneQuartic q = make_plane_quartic(std::move(form));
  q.certificate = check_smooth_quartic(q.form, rng);
  return q;
}

RatPoly fermat_quartic() {
  RatPoly f(3);
  f.add_term({4, 0, 0}, 1);
  f.add_term({0, 4, 0}, 1);
  f.add_term({0, 0, 4}, 1);
  return f;
}

RatPoly klein_quartic() {
  RatPoly f(3);
  f.add_term({3, 1, 0}, 1);
  f.add_term({0, 3, 1}, 1);
  f.add_term({1, 0, 3}, 1);
  return f;
}

}  // namespace scrolllab::curve
