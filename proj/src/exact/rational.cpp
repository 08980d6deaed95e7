#include "scrolllab/exact/rational.hpp"

#include "scrolllab/errors.hpp"

namespace scrolllab::exact {

std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_from_string(const std::string& s) {
  require(!s.empty(), Errc::io, "empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    require(den != 0, Errc::io, "zero denominator in rational literal: " + s);
    return Rational(num, den);
  } catch (const std::exception&) {
    fail(Errc::io, "malformed rational literal: " + s);
  }
}

}  // namespace scrolllab::exact
