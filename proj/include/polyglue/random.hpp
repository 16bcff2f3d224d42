#pragma once

#include <cstdint>

#include "polyglue/matrix.hpp"

namespace polyglue {

/// Deterministic generator (splitmix64); stable across platforms so seeded
/// runs reproduce byte-identical reports.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

/// Entries p/q with p in [-9, 9], q in [1, 9]; small denominators keep exact
/// arithmetic fast without degenerate structure.
inline RationalMatrix random_rational_matrix(int N, Rng& rng) {
  RationalMatrix m(N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      long long p = static_cast<long long>(rng.below(19)) - 9;
      long long q = static_cast<long long>(rng.below(9)) + 1;
      m(i, j) = Rational(p, q);
    }
  return m;
}

inline RationalMatrix random_rational_matrix(int N, std::uint64_t seed) {
  Rng rng(seed);
  return random_rational_matrix(N, rng);
}

}  // namespace polyglue
