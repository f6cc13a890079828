#ifndef EXACTLA_FRACTION_HPP
#define EXACTLA_FRACTION_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "exactla/errors.hpp"
#include "exactla/integers.hpp"
#include "exactla/poly_fp.hpp"
#include "exactla/ring.hpp"

namespace exactla {

// Canonical generator of the intersection of the principal ideals (e_1), ...,
// (e_k). Every element must be nonzero.
template <typename R>
R lcm_many(std::span<const R> elems) {
  if (elems.empty()) throw EmptyInput("lcm_many: empty input");
  for (const R& e : elems)
    if (is_zero(e)) throw ZeroElement("lcm_many: zero element");
  R acc = canonical_associate(elems[0]);
  for (std::size_t i = 1; i < elems.size(); ++i) {
    const R g = gcd(acc, elems[i]);
    acc = canonical_associate(exact_div(acc * elems[i], g));
  }
  return acc;
}

template <typename R>
R lcm_many(const std::vector<R>& elems) {
  return lcm_many(std::span<const R>(elems));
}

/*
 * Element of the fraction field of a Euclidean domain R (integers or
 * F_p[x]). Always kept in lowest terms with a canonical denominator:
 * positive over the integers, monic over F_p[x]. Equality is therefore
 * structural.
 */
template <typename R>
class Fraction {
 public:
  Fraction() : num_(0), den_(1) {}
  Fraction(R n) : num_(std::move(n)), den_(one_like(num_)) {}  // NOLINT: implicit
  Fraction(R n, R d) : num_(std::move(n)), den_(std::move(d)) {
    if (is_zero(den_)) throw DivisionByZero("Fraction: zero denominator");
    reduce();
  }

  const R& num() const { return num_; }
  const R& den() const { return den_; }

  bool integral() const { return is_one(den_); }

  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Fraction operator-(const Fraction& a, const Fraction& b) {
    return Fraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Fraction operator*(const Fraction& a, const Fraction& b) {
    return Fraction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Fraction operator/(const Fraction& a, const Fraction& b) {
    if (is_zero(b.num_)) throw DivisionByZero("Fraction: division by zero");
    return Fraction(a.num_ * b.den_, a.den_ * b.num_);
  }
  Fraction operator-() const {
    Fraction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  Fraction& operator+=(const Fraction& b) { return *this = *this + b; }
  Fraction& operator-=(const Fraction& b) { return *this = *this - b; }
  Fraction& operator*=(const Fraction& b) { return *this = *this * b; }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }

 private:
  R num_;
  R den_;

  void reduce() {
    if (is_zero(num_)) {
      den_ = one_like(den_);
      return;
    }
    const R g = gcd(num_, den_);
    if (!is_one(g)) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    const R u = unit_to_canonical(den_);
    if (!is_one(u)) {
      num_ = num_ * u;
      den_ = den_ * u;
    }
  }
};

template <typename R>
bool is_zero(const Fraction<R>& f) {
  return is_zero(f.num());
}
template <typename R>
bool is_one(const Fraction<R>& f) {
  return is_one(f.num()) && is_one(f.den());
}

// A vector over the fraction field written as x = nums / den with a single
// shared denominator. `den` is the canonical LCM of the reduced entry
// denominators, so it is exactly the denominator DEN(x) of the vector.
template <typename R>
struct ClearedVector {
  std::vector<R> nums;
  R den;
};

template <typename R>
ClearedVector<R> clear_denominators(const std::vector<Fraction<R>>& x) {
  if (x.empty()) throw EmptyInput("clear_denominators: empty vector");
  std::vector<R> dens;
  dens.reserve(x.size());
  for (const auto& f : x) dens.push_back(f.den());
  R chi = lcm_many(dens);
  ClearedVector<R> out;
  out.nums.reserve(x.size());
  for (const auto& f : x) out.nums.push_back(f.num() * exact_div(chi, f.den()));
  out.den = std::move(chi);
  return out;
}

template <typename R>
std::string format_element(const Fraction<R>& f) {
  if (f.integral()) return format_element(f.num());
  const std::string n = format_element(f.num());
  const std::string d = format_element(f.den());
  // parenthesize sums so the rendering stays unambiguous for polynomials
  const auto wrap = [](const std::string& s) {
    return s.find_first_of("+-", 1) == std::string::npos ? s : "(" + s + ")";
  };
  return wrap(n) + "/" + wrap(d);
}

}  // namespace exactla

#endif  // EXACTLA_FRACTION_HPP
