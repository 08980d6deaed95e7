#include "scrolllab/num/complexvec.hpp"

#include <cmath>

#include "scrolllab/errors.hpp"

namespace scrolllab::num {

CVec projective_normalize(const CVec& v) {
  const double n = v.norm();
  require(n > 0.0 && std::isfinite(n), Errc::input, "cannot normalize zero or non-finite vector");
  CVec u = v / n;
  // rotate the first entry carrying weight onto the positive real axis
  int lead = -1;
  for (int i = 0; i < u.size(); ++i)
    if (std::abs(u[i]) > 1e-13) {
      lead = i;
      break;
    }
  if (lead < 0) fail(Errc::input, "cannot normalize numerically zero vector");
  const Complex phase = u[lead] / std::abs(u[lead]);
  u /= phase;
  return u;
}

double projective_distance(const CVec& a, const CVec& b) {
  const double na = a.norm(), nb = b.norm();
  if (na == 0.0 || nb == 0.0) return 1.0;
  const CVec u = a / na;
  const CVec v = b / nb;
  // norm of the component of u orthogonal to v = sin(angle); stable near 0,
  // unlike sqrt(1 - |<u,v>|^2)
  const Complex inner = (v.adjoint() * u)(0);
  return std::min(1.0, (u - inner * v).norm());
}

bool is_finite(const CVec& v) {
  for (int i = 0; i < v.size(); ++i)
    if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag())) return false;
  return true;
}

}  // namespace scrolllab::num
