#pragma once

#include "strongconv/numeric/rational.hpp"

#include <cstdint>
#include <random>

namespace strongconv {

/// Seeded generator with a portable integer mapping, so a seed yields the
/// same stream with every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, n), n > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
      const std::uint64_t v = engine_();
      if (v < limit) return v % n;
    }
  }

  /// Uniform on [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// Uniform on the grid {lo + k/den} within [lo, hi].
  numeric::Rational grid(const numeric::Rational& lo, const numeric::Rational& hi, std::int64_t den) {
    const numeric::Integer steps = numeric::floor_integer((hi - lo) * den);
    const std::int64_t k = between(0, steps.convert_to<std::int64_t>());
    return lo + numeric::Rational(k, den);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace strongconv
