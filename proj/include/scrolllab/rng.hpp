#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "scrolllab/exact/rational.hpp"

namespace scrolllab {

// Single source of randomness. Every randomized choice in the pipeline
// (planes, lines, charts, retries) draws from one of these, seeded from
// the run config, so reports are bit-reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), eng_(seed) {}

  std::uint64_t seed() const { return seed_; }

  // Derived deterministic substream; use to decouple operation order.
  Rng fork(std::uint64_t salt) const;

  std::int64_t int_in(std::int64_t lo, std::int64_t hi);  // inclusive

  // Small-height rational in [-max_num, max_num] / [1, max_den].
  exact::Rational rational(int max_num = 9, int max_den = 4);
  exact::Rational nonzero_rational(int max_num = 9, int max_den = 4);
  std::vector<exact::Rational> rational_vector(int n, int max_num = 9, int max_den = 4);

  double uniform01();
  std::complex<double> unit_complex();      // on the unit circle
  std::complex<double> gaussian_complex();  // standard complex normal

 private:
  std::uint64_t seed_;
  std::mt19937_64 eng_;
};

}  // namespace scrolllab
