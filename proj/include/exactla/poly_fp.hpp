#ifndef EXACTLA_POLY_FP_HPP
#define EXACTLA_POLY_FP_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "exactla/errors.hpp"
#include "exactla/prime_field.hpp"
#include "exactla/rand_util.hpp"
#include "exactla/ring.hpp"

namespace exactla {

/*
 * Univariate polynomials over F_p, coefficients stored lowest degree first
 * with a nonzero leading coefficient. The Euclidean norm of an element is its
 * degree.
 *
 * Like Fp, a default- or integer-constructed value is an unbound constant
 * literal that picks up the modulus of the other operand on first use.
 */
class PolyFp {
 public:
  PolyFp() = default;
  PolyFp(long v) : lit_(v) {}  // NOLINT: implicit by design
  PolyFp(int v) : lit_(v) {}   // NOLINT

  static PolyFp zero(std::uint64_t p) { return from_coeffs(p, {}); }
  static PolyFp one(std::uint64_t p) { return from_coeffs(p, {1}); }

  static PolyFp constant(std::uint64_t p, std::int64_t c) {
    return from_signed(p, {c});
  }

  static PolyFp from_coeffs(std::uint64_t p, std::vector<std::uint64_t> coeffs) {
    check_modulus(p);
    PolyFp r;
    r.p_ = p;
    r.c_ = std::move(coeffs);
    for (auto& c : r.c_) c %= p;
    r.trim();
    return r;
  }

  static PolyFp from_signed(std::uint64_t p, const std::vector<std::int64_t>& coeffs) {
    check_modulus(p);
    std::vector<std::uint64_t> cs(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      std::int64_t v = coeffs[i] % static_cast<std::int64_t>(p);
      if (v < 0) v += static_cast<std::int64_t>(p);
      cs[i] = static_cast<std::uint64_t>(v);
    }
    return from_coeffs(p, std::move(cs));
  }

  static PolyFp monomial(std::uint64_t p, std::uint64_t coeff, std::size_t deg) {
    std::vector<std::uint64_t> cs(deg + 1, 0);
    cs[deg] = coeff;
    return from_coeffs(p, std::move(cs));
  }

  // The monic linear prime x - a, the prime element used for evaluation-point
  // lifting.
  static PolyFp linear_root(std::uint64_t p, std::uint64_t a) {
    return from_coeffs(p, {a == 0 ? 0 : p - a % p, 1});
  }

  bool bound() const { return p_ != 0; }
  std::uint64_t modulus() const { return p_; }

  // -1 for the zero polynomial.
  std::int64_t degree() const {
    if (!bound()) return lit_ == 0 ? -1 : 0;
    return static_cast<std::int64_t>(c_.size()) - 1;
  }

  std::uint64_t coeff(std::size_t i) const {
    if (!bound()) throw Error("PolyFp::coeff: unbound literal");
    return i < c_.size() ? c_[i] : 0;
  }

  std::uint64_t leading_coeff() const {
    if (!bound()) throw Error("PolyFp::leading_coeff: unbound literal");
    return c_.empty() ? 0 : c_.back();
  }

  bool is_monic() const { return bound() && !c_.empty() && c_.back() == 1; }

  PolyFp bound_to(std::uint64_t p) const {
    if (bound()) {
      if (p_ != p) throw Error("PolyFp: modulus mismatch");
      return *this;
    }
    return constant(p, lit_);
  }

  friend PolyFp operator+(const PolyFp& a, const PolyFp& b) {
    const std::uint64_t p = a.p_ ? a.p_ : b.p_;
    if (p == 0) return PolyFp(static_cast<long>(a.lit_ + b.lit_));
    const PolyFp x = a.bound_to(p), y = b.bound_to(p);
    PolyFp r;
    r.p_ = p;
    r.c_.resize(std::max(x.c_.size(), y.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i)
      r.c_[i] = addm(x.at(i), y.at(i), p);
    r.trim();
    return r;
  }

  friend PolyFp operator-(const PolyFp& a, const PolyFp& b) {
    const std::uint64_t p = a.p_ ? a.p_ : b.p_;
    if (p == 0) return PolyFp(static_cast<long>(a.lit_ - b.lit_));
    const PolyFp x = a.bound_to(p), y = b.bound_to(p);
    PolyFp r;
    r.p_ = p;
    r.c_.resize(std::max(x.c_.size(), y.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i)
      r.c_[i] = subm(x.at(i), y.at(i), p);
    r.trim();
    return r;
  }

  PolyFp operator-() const {
    if (!bound()) return PolyFp(static_cast<long>(-lit_));
    PolyFp r = *this;
    for (auto& c : r.c_) c = c == 0 ? 0 : p_ - c;
    return r;
  }

  friend PolyFp operator*(const PolyFp& a, const PolyFp& b) {
    const std::uint64_t p = a.p_ ? a.p_ : b.p_;
    if (p == 0) return PolyFp(static_cast<long>(a.lit_ * b.lit_));
    const PolyFp x = a.bound_to(p), y = b.bound_to(p);
    if (x.c_.empty() || y.c_.empty()) return zero(p);
    PolyFp r;
    r.p_ = p;
    r.c_.assign(x.c_.size() + y.c_.size() - 1, 0);
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
      if (x.c_[i] == 0) continue;
      for (std::size_t j = 0; j < y.c_.size(); ++j)
        r.c_[i + j] = addm(r.c_[i + j], mulm(x.c_[i], y.c_[j], p), p);
    }
    r.trim();
    return r;
  }

  PolyFp& operator+=(const PolyFp& b) { return *this = *this + b; }
  PolyFp& operator-=(const PolyFp& b) { return *this = *this - b; }
  PolyFp& operator*=(const PolyFp& b) { return *this = *this * b; }

  friend bool operator==(const PolyFp& a, const PolyFp& b) {
    const std::uint64_t p = a.p_ ? a.p_ : b.p_;
    if (p == 0) return a.lit_ == b.lit_;
    return a.bound_to(p).c_ == b.bound_to(p).c_;
  }
  friend bool operator!=(const PolyFp& a, const PolyFp& b) { return !(a == b); }

  // Horner evaluation at a point of F_p.
  std::uint64_t eval(std::uint64_t point) const {
    if (!bound()) throw Error("PolyFp::eval: unbound literal");
    const std::uint64_t a = point % p_;
    std::uint64_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
      acc = addm(mulm(acc, a, p_), c_[i], p_);
    return acc;
  }

  // Quotient and remainder of Euclidean division; divisor must be nonzero.
  friend std::pair<PolyFp, PolyFp> div_rem(const PolyFp& a, const PolyFp& b) {
    const std::uint64_t p = a.p_ ? a.p_ : b.p_;
    if (p == 0) throw Error("PolyFp: division requires a bound modulus");
    const PolyFp x = a.bound_to(p), y = b.bound_to(p);
    if (y.c_.empty()) throw DivisionByZero("PolyFp: division by zero");
    if (x.c_.size() < y.c_.size()) return {zero(p), x};
    const std::uint64_t lc_inv = invm(y.c_.back(), p);
    std::vector<std::uint64_t> rem = x.c_;
    std::vector<std::uint64_t> quo(x.c_.size() - y.c_.size() + 1, 0);
    for (std::size_t k = quo.size(); k-- > 0;) {
      const std::uint64_t top = rem[k + y.c_.size() - 1];
      if (top == 0) continue;
      const std::uint64_t q = mulm(top, lc_inv, p);
      quo[k] = q;
      for (std::size_t i = 0; i < y.c_.size(); ++i)
        rem[k + i] = subm(rem[k + i], mulm(q, y.c_[i], p), p);
    }
    return {from_coeffs(p, std::move(quo)), from_coeffs(p, std::move(rem))};
  }

  std::string str() const;

 private:
  std::uint64_t p_ = 0;
  std::int64_t lit_ = 0;
  std::vector<std::uint64_t> c_;

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::uint64_t at(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  static void check_modulus(std::uint64_t p) {
    if (p < 2 || p >= Fp::kMaxModulus) throw Error("PolyFp: modulus out of range");
  }

  static std::uint64_t addm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    const std::uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  static std::uint64_t subm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
  }
  static std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  }
  static std::uint64_t invm(std::uint64_t a, std::uint64_t p) {
    return Fp::make(p, a).inverse().value();
  }
};

inline bool is_zero(const PolyFp& a) { return a.degree() < 0; }
inline bool is_one(const PolyFp& a) { return a == PolyFp(1); }
inline bool is_unit(const PolyFp& a) { return a.degree() == 0; }

inline PolyFp zero_like(const PolyFp& x) {
  return x.bound() ? PolyFp::zero(x.modulus()) : PolyFp(0);
}
inline PolyFp one_like(const PolyFp& x) {
  return x.bound() ? PolyFp::one(x.modulus()) : PolyFp(1);
}

// Unit u with u * a monic.
inline PolyFp unit_to_canonical(const PolyFp& a) {
  if (is_zero(a)) return one_like(a);
  const Fp lc = Fp::make(a.modulus(), a.leading_coeff());
  return PolyFp::from_coeffs(a.modulus(), {lc.inverse().value()});
}

inline PolyFp canonical_associate(const PolyFp& a) {
  return is_zero(a) ? a : unit_to_canonical(a) * a;
}

inline PolyFp exact_div(const PolyFp& a, const PolyFp& b) {
  if (is_zero(b)) throw DivisionByZero("PolyFp: division by zero");
  if (is_zero(a)) return zero_like(b);
  auto [q, r] = div_rem(a, b);
  if (!is_zero(r))
    throw NotDivisible("exact_div: polynomial remainder is nonzero");
  return q;
}

// Monic gcd.
inline PolyFp gcd(const PolyFp& a, const PolyFp& b) {
  PolyFp r0 = a, r1 = b;
  while (!is_zero(r1)) {
    PolyFp r = div_rem(r0, r1).second;
    r0 = std::move(r1);
    r1 = std::move(r);
  }
  return canonical_associate(r0);
}

inline GcdExt<PolyFp> gcd_ext(const PolyFp& a, const PolyFp& b) {
  if (is_zero(a) && is_zero(b)) throw BothZero("gcd_ext: both arguments zero");
  const std::uint64_t p = a.bound() ? a.modulus() : b.modulus();
  PolyFp r0 = a.bound_to(p), r1 = b.bound_to(p);
  PolyFp s0 = PolyFp::one(p), s1 = PolyFp::zero(p);
  PolyFp t0 = PolyFp::zero(p), t1 = PolyFp::one(p);
  while (!is_zero(r1)) {
    auto [q, r] = div_rem(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  const PolyFp u = unit_to_canonical(r0);
  return {u * r0, u * s0, u * t0};
}

inline double norm_hint(const PolyFp& a) {
  return static_cast<double>(a.degree() < 0 ? 0 : a.degree());
}

// Random prime element for lifting: a monic linear x - a at a uniformly drawn
// evaluation point.
inline PolyFp random_linear_prime(std::uint64_t p, std::mt19937_64& rng) {
  return PolyFp::linear_root(p, uniform_below(rng, p));
}

// --- text syntax: c0+c1*x+c2*x^2, coefficients canonical mod p ---

inline std::string PolyFp::str() const {
  if (!bound()) return std::to_string(lit_);
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += '+';
    out += std::to_string(c_[i]);
    if (i == 1) out += "*x";
    if (i > 1) out += "*x^" + std::to_string(i);
  }
  return out;
}

inline std::string format_element(const PolyFp& a) { return a.str(); }

inline PolyFp parse_poly(std::string_view s, std::uint64_t p) {
  if (s.empty()) throw ParseError("empty polynomial token");
  std::vector<std::int64_t> acc;
  std::size_t i = 0;
  const auto fail = [&] { throw ParseError("invalid polynomial: '" + std::string(s) + "'"); };
  const auto read_digits = [&]() -> std::uint64_t {
    if (i >= s.size() || s[i] < '0' || s[i] > '9') fail();
    std::uint64_t v = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
      if (v > (1ULL << 52)) fail();  // coefficient / exponent far too large
      v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
      ++i;
    }
    return v;
  };
  bool first = true;
  while (i < s.size()) {
    std::int64_t sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
    } else if (!first) {
      fail();
    }
    first = false;
    std::uint64_t coeff = 1;
    bool have_coeff = false;
    if (i < s.size() && s[i] >= '0' && s[i] <= '9') {
      coeff = read_digits();
      have_coeff = true;
    }
    std::uint64_t deg = 0;
    if (i < s.size() && s[i] == '*') {
      ++i;
      if (i >= s.size() || s[i] != 'x') fail();
    }
    if (i < s.size() && s[i] == 'x') {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        deg = read_digits();
        if (deg > 100000) fail();
      }
    } else if (!have_coeff) {
      fail();
    }
    if (acc.size() <= deg) acc.resize(deg + 1, 0);
    const std::int64_t c = static_cast<std::int64_t>(coeff % p);
    const std::int64_t ip = static_cast<std::int64_t>(p);
    acc[deg] = ((acc[deg] + sign * c) % ip + ip) % ip;  // keep reduced
  }
  return PolyFp::from_signed(p, acc);
}

}  // namespace exactla

#endif  // EXACTLA_POLY_FP_HPP
