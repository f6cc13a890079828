#ifndef EXACTLA_INTEGERS_HPP
#define EXACTLA_INTEGERS_HPP

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "exactla/errors.hpp"
#include "exactla/rand_util.hpp"
#include "exactla/ring.hpp"

namespace exactla {

// Arbitrary-precision integers are GMP's mpz_class; the free functions below
// give them the same ring surface as the other element types.

inline bool is_zero(const mpz_class& a) { return mpz_sgn(a.get_mpz_t()) == 0; }
inline bool is_one(const mpz_class& a) { return mpz_cmp_ui(a.get_mpz_t(), 1) == 0; }
inline bool is_unit(const mpz_class& a) { return a == 1 || a == -1; }

inline mpz_class zero_like(const mpz_class&) { return mpz_class(0); }
inline mpz_class one_like(const mpz_class&) { return mpz_class(1); }

// Unit u such that u * a is the canonical associate (nonnegative).
inline mpz_class unit_to_canonical(const mpz_class& a) {
  return mpz_class(mpz_sgn(a.get_mpz_t()) < 0 ? -1 : 1);
}

inline mpz_class canonical_associate(const mpz_class& a) { return abs(a); }

inline mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
  if (is_zero(b)) throw DivisionByZero("exact_div: divisor is zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw NotDivisible("exact_div: " + a.get_str() + " not divisible by " + b.get_str());
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline GcdExt<mpz_class> gcd_ext(const mpz_class& a, const mpz_class& b) {
  if (is_zero(a) && is_zero(b)) throw BothZero("gcd_ext: both arguments zero");
  GcdExt<mpz_class> r;
  mpz_gcdext(r.g.get_mpz_t(), r.u.get_mpz_t(), r.v.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return r;  // g > 0 by GMP convention
}

namespace detail {

// Deterministic primality by trial division; for word-sized candidates only.
inline bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline mpz_class random_bits(unsigned bits, std::mt19937_64& rng) {
  mpz_class v(0);
  for (unsigned got = 0; got < bits; got += 64) {
    const std::uint64_t w = rng();
    v <<= 32;
    v += static_cast<unsigned long>(w >> 32);
    v <<= 32;
    v += static_cast<unsigned long>(w & 0xffffffffULL);
  }
  mpz_class mask(1);
  mask <<= bits;
  mask -= 1;
  return v & mask;
}

}  // namespace detail

// Random probable prime of exactly `bits` bits. Candidates below 2^20 are
// checked by trial division, larger ones with 40 Miller-Rabin style rounds
// (error probability well under 2^-64).
inline mpz_class random_prime(unsigned bits, std::mt19937_64& rng) {
  if (bits < 2)
    throw PreconditionViolated("random_prime: need at least 2 bits");
  for (;;) {
    mpz_class cand = detail::random_bits(bits, rng);
    mpz_setbit(cand.get_mpz_t(), bits - 1);  // exact bit length
    mpz_setbit(cand.get_mpz_t(), 0);         // odd
    if (bits <= 20) {
      if (detail::is_prime_trial(cand.get_ui())) return cand;
    } else if (mpz_probab_prime_p(cand.get_mpz_t(), 40) > 0) {
      return cand;
    }
  }
}

// ceil(sqrt(n)) for n >= 0.
inline mpz_class isqrt_ceil(const mpz_class& n) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r < n) r += 1;
  return r;
}

// floor(sqrt(m / 2)), the reconstruction bound for modulus m.
inline mpz_class isqrt_floor_half(const mpz_class& m) {
  const mpz_class h = m / 2;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), h.get_mpz_t());
  return r;
}

// Rough magnitude for iteration heuristics; exactness does not matter here.
inline double norm_hint(const mpz_class& a) {
  return std::abs(mpz_get_d(a.get_mpz_t()));
}

inline std::string format_element(const mpz_class& a) { return a.get_str(); }

inline mpz_class parse_integer(std::string_view s) {
  std::size_t i = 0;
  if (!s.empty() && s[0] == '-') i = 1;
  if (i == s.size()) throw ParseError("invalid integer: '" + std::string(s) + "'");
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9')
      throw ParseError("invalid integer: '" + std::string(s) + "'");
  return mpz_class(std::string(s), 10);
}

}  // namespace exactla

#endif  // EXACTLA_INTEGERS_HPP
