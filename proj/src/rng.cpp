#include "scrolllab/rng.hpp"

namespace scrolllab {

namespace {
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace

Rng Rng::fork(std::uint64_t salt) const { return Rng(splitmix64(seed_ ^ splitmix64(salt))); }

std::int64_t Rng::int_in(std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> d(lo, hi);
  return d(eng_);
}

exact::Rational Rng::rational(int max_num, int max_den) {
  const std::int64_t num = int_in(-max_num, max_num);
  const std::int64_t den = int_in(1, max_den);
  return exact::Rational(num, den);
}

exact::Rational Rng::nonzero_rational(int max_num, int max_den) {
  for (;;) {
    exact::Rational r = rational(max_num, max_den);
    if (r != 0) return r;
  }
}

std::vector<exact::Rational> Rng::rational_vector(int n, int max_num, int max_den) {
  std::vector<exact::Rational> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v.push_back(rational(max_num, max_den));
  return v;
}

double Rng::uniform01() {
  std::uniform_real_distribution<double> d(0.0, 1.0);
  return d(eng_);
}

std::complex<double> Rng::unit_complex() {
  const double t = 2.0 * M_PI * uniform01();
  return {std::cos(t), std::sin(t)};
}

std::complex<double> Rng::gaussian_complex() {
  std::normal_distribution<double> d(0.0, 1.0);
  const double re = d(eng_);
  const double im = d(eng_);
  return {re, im};
}

}  // namespace scrolllab
