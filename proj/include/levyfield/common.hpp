// Copyright (c) the levyfield developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace levyfield {

using cplx = std::complex<double>;

/// Base error for all user-facing failures (bad arguments, mismatched
/// inputs, preconditions violated by data rather than by code).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input file.
struct ParseError : Error {
  using Error::Error;
};

/// Deterministic 64-bit generator (splitmix64). Used everywhere a seed
/// appears so that results are reproducible across platforms; the standard
/// <random> distributions are not bit-portable.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in [-r, r).
  double symmetric(double r) { return (2.0 * uniform() - 1.0) * r; }

  /// Uniform complex sample from the disc of the given radius.
  cplx disc(double radius) {
    const double r = radius * std::sqrt(uniform());
    const double a = 2.0 * M_PI * uniform();
    return {r * std::cos(a), r * std::sin(a)};
  }

 private:
  std::uint64_t state_;
};

/// Stream-independent seed for sub-task `index` of a run seeded with `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
  return g.next();
}

/// exp(z) - 1 without cancellation for small |z|.
inline cplx expm1(cplx z) {
  const double x = z.real(), y = z.imag();
  const double s = std::sin(0.5 * y);
  return {std::expm1(x) * std::cos(y) - 2.0 * s * s,
          std::exp(x) * std::sin(y)};
}

}  // namespace levyfield
