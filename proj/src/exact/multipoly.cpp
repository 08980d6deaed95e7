#include "scrolllab/exact/multipoly.hpp"

namespace scrolllab::exact {

RatPoly divide_exact(const RatPoly& num, const RatPoly& den) {
  require(!den.is_zero(), Errc::degenerate_input, "division by zero polynomial");
  RatPoly rem = num;
  RatPoly quot(num.nvars());
  const auto& dlead = *den.terms().begin();
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms().begin();
    Exponents qe(static_cast<std::size_t>(num.nvars()));
    for (int i = 0; i < num.nvars(); ++i) {
      qe[i] = rlead.first[i] - dlead.first[i];
      require(qe[i] >= 0, Errc::degenerate_input, "inexact polynomial division");
    }
    const Rational qc = rlead.second / dlead.second;
    RatPoly qterm = RatPoly::monomial(qe, qc);
    quot += qterm;
    rem -= qterm * den;
  }
  return quot;
}

CPoly to_cpoly(const RatPoly& p) {
  CPoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) out.add_term(e, to_complex(c));
  return out;
}

namespace {
void enumerate_monomials(int nvars, int pos, int remaining, Exponents& cur, std::vector<Exponents>& out) {
  if (pos == nvars - 1) {
    cur[static_cast<std::size_t>(pos)] = remaining;
    out.push_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[static_cast<std::size_t>(pos)] = e;
    enumerate_monomials(nvars, pos + 1, remaining - e, cur, out);
  }
}
}  // namespace

std::vector<Exponents> monomials_of_degree(int nvars, int degree) {
  require(nvars >= 1 && degree >= 0, Errc::input, "bad monomial enumeration request");
  std::vector<Exponents> out;
  Exponents cur(static_cast<std::size_t>(nvars), 0);
  enumerate_monomials(nvars, 0, degree, cur, out);
  return out;
}

}  // namespace scrolllab::exact
