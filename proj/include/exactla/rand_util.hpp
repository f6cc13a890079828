#ifndef EXACTLA_RAND_UTIL_HPP
#define EXACTLA_RAND_UTIL_HPP

#include <cstdint>
#include <limits>
#include <random>

namespace exactla {

// Unbiased draw from [0, n). Hand-rolled rejection sampling so that seeded
// runs produce identical streams regardless of the standard library's
// uniform_int_distribution implementation.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) return 0;
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  for (;;) {
    const std::uint64_t r = rng();
    if (r < limit) return r % n;
  }
}

// Uniform signed draw from [lo, hi], inclusive.
inline std::int64_t uniform_in(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(uniform_below(rng, span));
}

}  // namespace exactla

#endif  // EXACTLA_RAND_UTIL_HPP
