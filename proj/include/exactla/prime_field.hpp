#ifndef EXACTLA_PRIME_FIELD_HPP
#define EXACTLA_PRIME_FIELD_HPP

#include <cstdint>
#include <string>
#include <utility>

#include "exactla/errors.hpp"
#include "exactla/ring.hpp"

namespace exactla {

/*
 * Residue field F_p for a word-sized prime p (p < 2^62).
 *
 * A default-constructed or integer-constructed value is an unbound literal:
 * it carries no modulus and is reduced against the other operand's modulus on
 * first use. Generic code (and Eigen's Scalar(0) / Scalar(1)) produces such
 * literals; all other values are bound residues in [0, p).
 */
class Fp {
 public:
  static constexpr std::uint64_t kMaxModulus = (1ULL << 62);

  Fp() = default;
  Fp(long v) : v_(static_cast<std::uint64_t>(static_cast<std::int64_t>(v))) {}  // NOLINT: implicit by design
  Fp(int v) : Fp(static_cast<long>(v)) {}

  static Fp make(std::uint64_t p, std::uint64_t value) {
    check_modulus(p);
    Fp r;
    r.p_ = p;
    r.v_ = value % p;
    return r;
  }

  static Fp from_signed(std::uint64_t p, std::int64_t value) {
    check_modulus(p);
    Fp r;
    r.p_ = p;
    r.v_ = reduce_signed(value, p);
    return r;
  }

  bool bound() const { return p_ != 0; }
  std::uint64_t modulus() const { return p_; }

  // Canonical residue; a literal is reported as its reduction would be
  // meaningless without a modulus, so it must be bound first.
  std::uint64_t value() const {
    if (!bound()) throw Error("Fp::value: unbound literal");
    return v_;
  }

  Fp bound_to(std::uint64_t p) const {
    if (bound()) {
      if (p_ != p) throw Error("Fp: modulus mismatch");
      return *this;
    }
    return from_signed(p, literal());
  }

  friend Fp operator+(const Fp& a, const Fp& b) {
    const std::uint64_t p = a.p_ ? a.p_ : b.p_;
    if (p == 0) return lit(a.literal() + b.literal());
    const Fp x = a.bound_to(p), y = b.bound_to(p);
    std::uint64_t s = x.v_ + y.v_;
    if (s >= p) s -= p;
    return raw(p, s);
  }

  friend Fp operator-(const Fp& a, const Fp& b) {
    const std::uint64_t p = a.p_ ? a.p_ : b.p_;
    if (p == 0) return lit(a.literal() - b.literal());
    const Fp x = a.bound_to(p), y = b.bound_to(p);
    const std::uint64_t s = x.v_ >= y.v_ ? x.v_ - y.v_ : x.v_ + p - y.v_;
    return raw(p, s);
  }

  Fp operator-() const {
    if (!bound()) return lit(-literal());
    return raw(p_, v_ == 0 ? 0 : p_ - v_);
  }

  friend Fp operator*(const Fp& a, const Fp& b) {
    const std::uint64_t p = a.p_ ? a.p_ : b.p_;
    if (p == 0) return lit(a.literal() * b.literal());
    const Fp x = a.bound_to(p), y = b.bound_to(p);
    const auto prod = static_cast<unsigned __int128>(x.v_) * y.v_;
    return raw(p, static_cast<std::uint64_t>(prod % p));
  }

  Fp& operator+=(const Fp& b) { return *this = *this + b; }
  Fp& operator-=(const Fp& b) { return *this = *this - b; }
  Fp& operator*=(const Fp& b) { return *this = *this * b; }

  Fp inverse() const {
    if (!bound() || v_ == 0) throw DivisionByZero("Fp: inverse of zero");
    // extended Euclid on (v, p)
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), newr = static_cast<std::int64_t>(v_);
    while (newr != 0) {
      const std::int64_t q = r / newr;
      t = std::exchange(newt, t - q * newt);
      r = std::exchange(newr, r - q * newr);
    }
    if (r != 1) throw Error("Fp: modulus is not prime");
    return from_signed(p_, t);
  }

  friend bool operator==(const Fp& a, const Fp& b) {
    const std::uint64_t p = a.p_ ? a.p_ : b.p_;
    if (p == 0) return a.literal() == b.literal();
    return a.bound_to(p).v_ == b.bound_to(p).v_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  std::string str() const {
    return bound() ? std::to_string(v_) : std::to_string(literal());
  }

 private:
  std::uint64_t v_ = 0;  // residue, or the bit pattern of an int64 literal
  std::uint64_t p_ = 0;  // 0 = unbound literal

  std::int64_t literal() const { return static_cast<std::int64_t>(v_); }

  static Fp lit(std::int64_t v) {
    Fp r;
    r.v_ = static_cast<std::uint64_t>(v);
    return r;
  }

  static Fp raw(std::uint64_t p, std::uint64_t v) {
    Fp r;
    r.p_ = p;
    r.v_ = v;
    return r;
  }

  static void check_modulus(std::uint64_t p) {
    if (p < 2 || p >= kMaxModulus) throw Error("Fp: modulus out of range");
  }

  static std::uint64_t reduce_signed(std::int64_t x, std::uint64_t p) {
    std::int64_t r = x % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r);
  }
};

inline bool is_zero(const Fp& a) {
  return a.bound() ? a.value() == 0 : a == Fp(0);
}
inline bool is_one(const Fp& a) { return a == Fp(1); }
inline bool is_unit(const Fp& a) { return !is_zero(a); }

inline Fp zero_like(const Fp& x) { return x.bound() ? Fp::make(x.modulus(), 0) : Fp(0); }
inline Fp one_like(const Fp& x) { return x.bound() ? Fp::make(x.modulus(), 1) : Fp(1); }

// Every nonzero element is a unit, so exact division is plain field division.
inline Fp exact_div(const Fp& a, const Fp& b) {
  if (is_zero(b)) throw DivisionByZero("Fp: division by zero");
  if (is_zero(a)) return zero_like(a.bound() ? a : b);
  const std::uint64_t p = b.bound() ? b.modulus() : a.modulus();
  return a.bound_to(p) * b.bound_to(p).inverse();
}

inline std::string format_element(const Fp& a) { return a.str(); }

}  // namespace exactla

#endif  // EXACTLA_PRIME_FIELD_HPP
