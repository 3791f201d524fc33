#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ffp/ffpoly.hpp"
#include "ffp/rational.hpp"

namespace ffp {

// Seeded source of small rationals: numerator in [-9, 9], denominator in {1, 2, 3}.
// Plain modulo keeps the stream identical across standard libraries.
class RandomRationals {
 public:
  explicit RandomRationals(std::uint64_t seed) : rng_(seed) {}

  Rational next() {
    const long num = static_cast<long>(rng_() % 19) - 9;
    const long den = static_cast<long>(rng_() % 3) + 1;
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  Rational next_nonzero() {
    while (true) {
      Rational q = next();
      if (q != 0) return q;
    }
  }

  Sequence sequence(int length) {
    Sequence out;
    out.reserve(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) out.push_back(next());
    return out;
  }

  MonicPoly monic(int d) {
    std::vector<Rational> a{Rational(1)};
    for (int i = 1; i <= d; ++i) a.push_back(next());
    return MonicPoly::from_coefficients(std::move(a));
  }

  std::uint64_t raw() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace ffp
