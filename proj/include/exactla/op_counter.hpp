#ifndef EXACTLA_OP_COUNTER_HPP
#define EXACTLA_OP_COUNTER_HPP

#include <cstdint>

namespace exactla {

/*
 * Tally of ring operations performed by a computation.
 *
 * `multiplications` counts element multiplications inside matrix products and
 * elimination cores; `exact_divisions` counts exact ring divisions;
 * `scalings` counts scalar-by-matrix products and other order-n^2 scalar work,
 * kept separate so the block-product tally can be compared against the
 * recursion-sum prediction without the neglected quadratic terms.
 *
 * A counter must not be shared between concurrent computations.
 */
struct OpCounter {
  std::uint64_t multiplications = 0;
  std::uint64_t exact_divisions = 0;
  std::uint64_t scalings = 0;

  OpCounter& operator+=(const OpCounter& o) {
    multiplications += o.multiplications;
    exact_divisions += o.exact_divisions;
    scalings += o.scalings;
    return *this;
  }

  OpCounter delta_since(const OpCounter& earlier) const {
    return {multiplications - earlier.multiplications,
            exact_divisions - earlier.exact_divisions,
            scalings - earlier.scalings};
  }
};

}  // namespace exactla

#endif  // EXACTLA_OP_COUNTER_HPP
