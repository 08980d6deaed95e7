#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <complex>
#include <string>

namespace scrolllab::exact {

// Coefficient field for every exact construction. mpq_rational keeps the
// value canonical: gcd(num, den) = 1 and den > 0 at all times.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::complex<double> to_complex(const Rational& r) {
  return {to_double(r), 0.0};
}

// Serialized as "p/q", or just "p" when q = 1.
std::string rational_to_string(const Rational& r);

// Accepts "p", "p/q", optional sign, arbitrary precision. Throws on junk
// or zero denominator.
Rational rational_from_string(const std::string& s);

}  // namespace scrolllab::exact
