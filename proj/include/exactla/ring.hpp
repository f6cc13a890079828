#ifndef EXACTLA_RING_HPP
#define EXACTLA_RING_HPP

namespace exactla {

// Result of the extended Euclidean algorithm: g = gcd(a, b) in canonical form
// (nonnegative over the integers, monic over F_p[x]) with u*a + v*b = g.
template <typename R>
struct GcdExt {
  R g;
  R u;
  R v;
};

}  // namespace exactla

#endif  // EXACTLA_RING_HPP
