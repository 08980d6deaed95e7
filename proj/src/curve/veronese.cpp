#include "scrolllab/curve/veronese.hpp"

namespace scrolllab::curve {

using exact::Exponents;
using exact::Rational;
using exact::RatPoly;
using num::CVec;

num::CVec veronese_lift(const num::CVec& p) {
  require(p.size() == 3, Errc::input, "veronese lift expects a plane point");
  require(p.norm() > 0.0, Errc::input, "veronese lift of the zero vector");
  CVec z(6);
  for (int k = 0; k < 6; ++k) {
    num::Complex v(1.0, 0.0);
    for (int i = 0; i < 3; ++i)
      for (int e = 0; e < kVeroneseExponents[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]; ++e)
        v *= p[i];
    z[k] = v;
  }
  return num::projective_normalize(z);
}

std::vector<Rational> veronese_lift_exact(const std::vector<Rational>& p) {
  require(p.size() == 3, Errc::input, "veronese lift expects a plane point");
  std::vector<Rational> z(6, Rational(1));
  for (int k = 0; k < 6; ++k) {
    Rational v(1);
    for (int i = 0; i < 3; ++i)
      for (int e = 0; e < kVeroneseExponents[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]; ++e)
        v *= p[static_cast<std::size_t>(i)];
    z[static_cast<std::size_t>(k)] = v;
  }
  return z;
}

exact::RatPoly veronese_pullback(const RatMatrix& gram) {
  require(gram.rows() == 6 && gram.cols() == 6, Errc::dimension, "expected 6x6 Gram matrix");
  require(gram.is_symmetric(), Errc::input, "Gram matrix must be symmetric");
  // monomial polynomials m_k(x)
  std::array<RatPoly, 6> m;
  for (int k = 0; k < 6; ++k) {
    Exponents e = {kVeroneseExponents[static_cast<std::size_t>(k)][0], kVeroneseExponents[static_cast<std::size_t>(k)][1],
                   kVeroneseExponents[static_cast<std::size_t>(k)][2]};
    m[static_cast<std::size_t>(k)] = RatPoly::monomial(e, Rational(1));
  }
  RatPoly out(3);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      if (gram.at(i, j) == 0) continue;
      out += m[static_cast<std::size_t>(i)] * m[static_cast<std::size_t>(j)] * gram.at(i, j);
    }
  return out;
}

RatMatrix gram_from_upper_coeffs(const std::vector<Rational>& coeffs21) {
  require(coeffs21.size() == 21, Errc::dimension, "expected 21 quadric coefficients");
  RatMatrix g(6, 6);
  int k = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = i; j < 6; ++j) {
      const Rational& c = coeffs21[static_cast<std::size_t>(k++)];
      if (i == j) {
        g.at(i, i) = c;
      } else {
        g.at(i, j) = c / 2;
        g.at(j, i) = c / 2;
      }
    }
  return g;
}

QuadricBasis quadrics_through_bicanonical(const PlaneQuartic& f) {
  require(f.certified_smooth(), Errc::precondition, "quadric space needs a certified-smooth quartic");

  const auto quartic_monomials = exact::monomials_of_degree(3, 4);  // 15, global order
  auto quartic_row = [&](const RatPoly& p) {
    std::vector<Rational> row(15, Rational(0));
    for (const auto& [e, c] : p.terms()) {
      for (std::size_t r = 0; r < quartic_monomials.size(); ++r)
        if (quartic_monomials[r] == e) {
          row[r] = c;
          break;
        }
    }
    return row;
  };

  // pullback matrix: 15 quartic coefficients x (21 quadric monomials + f)
  RatMatrix m(15, 22);
  int col = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = i; j < 6; ++j) {
      Exponents e(3, 0);
      for (int v = 0; v < 3; ++v)
        e[static_cast<std::size_t>(v)] = kVeroneseExponents[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] +
                                         kVeroneseExponents[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)];
      const auto row = quartic_row(RatPoly::monomial(e, Rational(1)));
      for (int r = 0; r < 15; ++r) m.at(r, col) = row[static_cast<std::size_t>(r)];
      ++col;
    }
  {
    const auto frow = quartic_row(f.form);
    for (int r = 0; r < 15; ++r) m.at(r, 21) = -frow[static_cast<std::size_t>(r)];
  }

  // the multiplication map Sym^2 -> quartics has full rank 15 for any f
  require(exact::rank(m) == 15, Errc::rank, "unexpected pullback rank (expected 15)");

  const auto basis = exact::exact_nullspace(m);
  require(basis.size() == 7, Errc::rank,
          "quadrics through the bicanonical curve: expected dimension 7, got " + std::to_string(basis.size()));

  QuadricBasis out;
  for (const auto& v : basis) {
    std::vector<Rational> c21(v.begin(), v.begin() + 21);
    out.grams.push_back(gram_from_upper_coeffs(c21));
    out.veronese_ideal.push_back(v[21] == 0);
  }
  // reduced-echelon construction puts the ideal quadrics (t = 0) first and
  // exactly one basis element with t = 1 last
  require(!out.veronese_ideal.back(), Errc::rank, "expected the non-ideal quadric last in the echelon basis");
  out.extra_pullback = veronese_pullback(out.grams.back());
  out.extra_multiplier = basis.back()[21];
  return out;
}

}  // namespace scrolllab::curve
