#ifndef EXACTLA_DIXON_HPP
#define EXACTLA_DIXON_HPP

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "exactla/elimination.hpp"
#include "exactla/fraction.hpp"
#include "exactla/matrix.hpp"

namespace exactla {

/*
 * Determined-system solver by linear p-adic lifting: pick a prime element p
 * not dividing det A, invert A in the residue field, lift the solution to a
 * modulus exceeding twice the product of the numerator and denominator
 * bounds, then recover each coordinate by rational reconstruction. The
 * accepted output always satisfies A*x = c exactly; a failed verification
 * retries with a fresh prime.
 *
 * Instantiated for the integers (word-sized random primes) and for F_p[x]
 * (monic linear primes x - a, where lifting is expansion around the
 * evaluation point and magnitude bounds become degree bounds).
 */

struct DixonOptions {
  unsigned prime_bits = 62;  // integer primes; word-sized residues are cheap
  int max_primes = 8;        // draws before falling back to exact elimination
};

// A solution vector over the fraction field, entries in lowest terms.
template <typename S>
using RationalVector = std::vector<Fraction<S>>;

template <typename S>
struct LiftingContext {
  S prime;
  Mat<Fp> inverse_mod_p;
  int steps = 0;  // lifting steps k
  S modulus;      // prime^k; exceeds twice the product of the solution bounds
};

// --- Hadamard-style bounds ---

// Integer bound >= |det a|: product of ceiled row Euclidean norms.
inline mpz_class hadamard_bound(const Mat<mpz_class>& a) {
  if (a.rows() != a.cols()) throw NotSquare("hadamard_bound: matrix not square");
  if (a.size() == 0) throw EmptyInput("hadamard_bound: empty matrix");
  mpz_class prod = 1;
  for (Index i = 0; i < a.rows(); ++i) {
    mpz_class s = 0;
    for (Index j = 0; j < a.cols(); ++j) s += a(i, j) * a(i, j);
    prod *= isqrt_ceil(s);
  }
  return prod;
}

// Degree analogue: deg det <= sum of per-row maximum degrees. Returns -1 when
// some row vanishes identically (the determinant is zero).
inline std::int64_t hadamard_bound(const Mat<PolyFp>& a) {
  if (a.rows() != a.cols()) throw NotSquare("hadamard_bound: matrix not square");
  if (a.size() == 0) throw EmptyInput("hadamard_bound: empty matrix");
  std::int64_t sum = 0;
  for (Index i = 0; i < a.rows(); ++i) {
    std::int64_t best = -1;
    for (Index j = 0; j < a.cols(); ++j) best = std::max(best, a(i, j).degree());
    if (best < 0) return -1;
    sum += best;
  }
  return sum;
}

// --- rational reconstruction ---

// Recover n/d from u mod M with |n| <= floor(sqrt(M/2)), 0 < d <= the same
// bound and gcd(d, M) = 1, by truncated extended Euclid. Empty result means
// the lifting modulus was too small.
inline std::optional<Fraction<mpz_class>> rational_reconstruct(const mpz_class& u,
                                                               const mpz_class& m) {
  if (m < 2 || u < 0 || u >= m)
    throw PreconditionViolated("rational_reconstruct: need 0 <= u < M, M >= 2");
  const mpz_class bound = isqrt_floor_half(m);
  mpz_class r0 = m, r1 = u;
  mpz_class t0 = 0, t1 = 1;
  while (r1 > bound) {
    const mpz_class q = r0 / r1;
    mpz_class r = r0 - q * r1;
    r0 = std::exchange(r1, std::move(r));
    mpz_class t = t0 - q * t1;
    t0 = std::exchange(t1, std::move(t));
  }
  mpz_class n = r1, d = t1;
  if (is_zero(d)) return std::nullopt;
  if (d < 0) {
    d = -d;
    n = -n;
  }
  if (d > bound) return std::nullopt;
  if (gcd(d, m) != 1) return std::nullopt;
  return Fraction<mpz_class>(std::move(n), std::move(d));
}

// F_p[x] analogue: numerator degree up to (deg M - 1) / 2, denominator
// coprime to M.
inline std::optional<Fraction<PolyFp>> rational_reconstruct(const PolyFp& u,
                                                            const PolyFp& m) {
  if (m.degree() < 1) throw PreconditionViolated("rational_reconstruct: modulus is constant");
  if (u.degree() >= m.degree())
    throw PreconditionViolated("rational_reconstruct: residue not reduced");
  const std::int64_t num_bound = (m.degree() - 1) / 2;
  const std::int64_t den_bound = m.degree() - 1 - num_bound;
  PolyFp r0 = m, r1 = u;
  PolyFp t0 = PolyFp::zero(m.modulus()), t1 = PolyFp::one(m.modulus());
  while (r1.degree() > num_bound) {
    auto [q, r] = div_rem(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    PolyFp t = t0 - q * t1;
    t0 = std::exchange(t1, std::move(t));
  }
  if (is_zero(t1)) return std::nullopt;
  if (t1.degree() > den_bound) return std::nullopt;
  if (!is_one(gcd(t1, m))) return std::nullopt;
  return Fraction<PolyFp>(std::move(r1), std::move(t1));
}

// --- residue-field linear algebra ---

// Gauss-Jordan inverse over F_p; empty when singular mod p.
inline std::optional<Mat<Fp>> fp_inverse(const Mat<Fp>& a, OpCounter& counter) {
  const Index n = a.rows();
  if (n != a.cols()) throw NotSquare("fp_inverse: matrix not square");
  Mat<Fp> w = a;
  Mat<Fp> inv = identity_like(n, a(0, 0));
  for (Index k = 0; k < n; ++k) {
    Index piv = -1;
    for (Index i = k; i < n && piv < 0; ++i)
      if (!is_zero(w(i, k))) piv = i;
    if (piv < 0) return std::nullopt;
    if (piv != k) {
      w.row(k).swap(w.row(piv));
      inv.row(k).swap(inv.row(piv));
    }
    const Fp scale = w(k, k).inverse();
    for (Index j = 0; j < n; ++j) {
      w(k, j) *= scale;
      inv(k, j) *= scale;
    }
    counter.multiplications += 2 * static_cast<std::uint64_t>(n);
    for (Index i = 0; i < n; ++i) {
      if (i == k || is_zero(w(i, k))) continue;
      const Fp f = w(i, k);
      for (Index j = 0; j < n; ++j) {
        w(i, j) -= f * w(k, j);
        inv(i, j) -= f * inv(k, j);
      }
      counter.multiplications += 2 * static_cast<std::uint64_t>(n);
    }
  }
  return inv;
}

// Exact check A * x = c for a fraction vector x.
template <typename S>
bool solves_exactly(const Mat<S>& a, const Vec<S>& c,
                    const std::vector<Fraction<S>>& x, OpCounter& counter) {
  if (static_cast<Index>(x.size()) != a.cols()) return false;
  ClearedVector<S> cl = clear_denominators(x);
  Vec<S> xbar(a.cols());
  for (Index i = 0; i < a.cols(); ++i) xbar(i) = cl.nums[static_cast<std::size_t>(i)];
  return equal(mat_vec(a, xbar, counter), scale_vec(cl.den, c, counter));
}

namespace detail {

// One p-adic lift of a single right-hand side, `steps` at a time, with up to
// two extensions if reconstruction reports the modulus too small.
inline std::optional<std::vector<Fraction<mpz_class>>> lift_column_z(
    const Mat<mpz_class>& a, const Vec<mpz_class>& c,
    const LiftingContext<mpz_class>& ctx, OpCounter& counter) {
  const Index n = a.rows();
  const std::uint64_t pu = ctx.prime.get_ui();
  Vec<mpz_class> cur = c;
  std::vector<mpz_class> acc(static_cast<std::size_t>(n), mpz_class(0));
  mpz_class ppow = 1;
  int steps = ctx.steps;
  for (int extensions = 0; extensions <= 2; ++extensions) {
    for (int s = 0; s < steps; ++s) {
      Vec<Fp> resid(n);
      for (Index i = 0; i < n; ++i)
        resid(i) = Fp::make(pu, mpz_fdiv_ui(cur(i).get_mpz_t(), pu));
      const Vec<Fp> xi = mat_vec(ctx.inverse_mod_p, resid, counter);
      for (Index i = 0; i < n; ++i) {
        mpz_class& ci = cur(i);
        for (Index j = 0; j < n; ++j)
          mpz_submul_ui(ci.get_mpz_t(), a(i, j).get_mpz_t(), xi(j).value());
        // exact by construction: cur - A*xi vanishes mod p
        if (!mpz_divisible_p(ci.get_mpz_t(), ctx.prime.get_mpz_t()))
          throw Error("dixon: lifting residual not divisible by p");
        mpz_divexact(ci.get_mpz_t(), ci.get_mpz_t(), ctx.prime.get_mpz_t());
      }
      counter.multiplications += static_cast<std::uint64_t>(n) * n;
      counter.exact_divisions += static_cast<std::uint64_t>(n);
      for (Index i = 0; i < n; ++i)
        mpz_addmul_ui(acc[static_cast<std::size_t>(i)].get_mpz_t(), ppow.get_mpz_t(),
                      xi(i).value());
      counter.scalings += static_cast<std::uint64_t>(n);
      ppow *= ctx.prime;
    }
    std::vector<Fraction<mpz_class>> out;
    out.reserve(static_cast<std::size_t>(n));
    bool ok = true;
    for (Index i = 0; i < n && ok; ++i) {
      auto f = rational_reconstruct(acc[static_cast<std::size_t>(i)], ppow);
      if (f)
        out.push_back(std::move(*f));
      else
        ok = false;
    }
    if (ok) return out;
    steps = steps / 2 + 1;
  }
  return std::nullopt;
}

inline std::optional<std::vector<Fraction<PolyFp>>> lift_column_fx(
    const Mat<PolyFp>& a, const Vec<PolyFp>& c, const LiftingContext<PolyFp>& ctx,
    std::uint64_t point, OpCounter& counter) {
  const Index n = a.rows();
  const std::uint64_t p = ctx.prime.modulus();
  Vec<PolyFp> cur = c;
  std::vector<PolyFp> acc(static_cast<std::size_t>(n), PolyFp::zero(p));
  PolyFp ppow = PolyFp::one(p);
  int steps = ctx.steps;
  for (int extensions = 0; extensions <= 2; ++extensions) {
    for (int s = 0; s < steps; ++s) {
      Vec<Fp> resid(n);
      for (Index i = 0; i < n; ++i) resid(i) = Fp::make(p, cur(i).eval(point));
      const Vec<Fp> xi = mat_vec(ctx.inverse_mod_p, resid, counter);
      for (Index i = 0; i < n; ++i) {
        PolyFp s_i = cur(i);
        for (Index j = 0; j < n; ++j)
          s_i -= a(i, j) * PolyFp::constant(p, static_cast<std::int64_t>(xi(j).value()));
        cur(i) = exact_div(s_i, ctx.prime);  // Taylor residual, exact
      }
      counter.multiplications += static_cast<std::uint64_t>(n) * n;
      counter.exact_divisions += static_cast<std::uint64_t>(n);
      for (Index i = 0; i < n; ++i)
        acc[static_cast<std::size_t>(i)] +=
            ppow * PolyFp::constant(p, static_cast<std::int64_t>(xi(i).value()));
      counter.scalings += static_cast<std::uint64_t>(n);
      ppow *= ctx.prime;
    }
    std::vector<Fraction<PolyFp>> out;
    out.reserve(static_cast<std::size_t>(n));
    bool ok = true;
    for (Index i = 0; i < n && ok; ++i) {
      auto f = rational_reconstruct(acc[static_cast<std::size_t>(i)], ppow);
      if (f)
        out.push_back(std::move(*f));
      else
        ok = false;
    }
    if (ok) return out;
    steps = steps / 2 + 1;
  }
  return std::nullopt;
}

}  // namespace detail

// Solve A * x = rhs_j for every column of rhs, sharing one prime, one
// residue-field inverse and one bound computation across all columns.
inline std::vector<std::vector<Fraction<mpz_class>>> dixon_solve_many(
    const Mat<mpz_class>& a, const Mat<mpz_class>& rhs, std::mt19937_64& rng,
    OpCounter& counter, const DixonOptions& opts = {}) {
  const Index n = a.rows();
  if (n != a.cols()) throw NotSquare("dixon_solve: matrix not square");
  if (a.size() == 0) throw EmptyInput("dixon_solve: empty matrix");
  if (rhs.rows() != n) throw DimensionMismatch("dixon_solve: rhs rows disagree");

  // Common magnitude bound for the determinant and all Cramer numerators,
  // based on column norms with one column replaced by a right-hand side.
  std::vector<mpz_class> ncol(static_cast<std::size_t>(n));
  bool zero_col = false;
  for (Index j = 0; j < n; ++j) {
    mpz_class s = 0;
    for (Index i = 0; i < n; ++i) s += a(i, j) * a(i, j);
    ncol[static_cast<std::size_t>(j)] = isqrt_ceil(s);
    zero_col = zero_col || is_zero(ncol[static_cast<std::size_t>(j)]);
  }
  mpz_class ncmax = 1;
  for (Index j = 0; j < rhs.cols(); ++j) {
    mpz_class s = 0;
    for (Index i = 0; i < n; ++i) s += rhs(i, j) * rhs(i, j);
    mpz_class r = isqrt_ceil(s);
    if (r > ncmax) ncmax = r;
  }

  if (!zero_col) {
    mpz_class prod = 1;
    for (const auto& v : ncol) prod *= v;
    mpz_class bound = prod;
    for (const auto& v : ncol) {
      mpz_class repl = exact_div(prod, v) * ncmax;
      if (repl > bound) bound = repl;
    }
    mpz_class target = 2 * bound * bound;
    if (target < 2) target = 2;

    for (int tried = 0; tried < opts.max_primes; ++tried) {
      const mpz_class p = random_prime(opts.prime_bits, rng);
      const std::uint64_t pu = p.get_ui();
      Mat<Fp> ap(n, n);
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
          ap(i, j) = Fp::make(pu, mpz_fdiv_ui(a(i, j).get_mpz_t(), pu));
      auto inv = fp_inverse(ap, counter);
      if (!inv) continue;  // p divides det A; probability at most 1/p

      LiftingContext<mpz_class> ctx{p, std::move(*inv), 1, p};
      while (ctx.modulus <= target) {
        ctx.modulus *= p;
        ++ctx.steps;
      }
      ctx.modulus *= p;  // one extra step of margin
      ++ctx.steps;

      std::vector<std::vector<Fraction<mpz_class>>> result;
      result.reserve(static_cast<std::size_t>(rhs.cols()));
      bool all_ok = true;
      for (Index j = 0; j < rhs.cols() && all_ok; ++j) {
        const Vec<mpz_class> c = rhs.col(j);
        auto x = detail::lift_column_z(a, c, ctx, counter);
        all_ok = x && solves_exactly(a, c, *x, counter);
        if (all_ok) result.push_back(std::move(*x));
      }
      if (all_ok) return result;
    }
  }

  OpCounter scratch;
  if (is_zero(determinant(a, scratch)))
    throw SingularMatrix("dixon_solve: coefficient matrix is singular");
  throw RetryLimit("dixon_solve: retry limit exceeded");
}

inline RationalVector<mpz_class> dixon_solve(const Mat<mpz_class>& a,
                                                    const Vec<mpz_class>& c,
                                                    std::mt19937_64& rng,
                                                    OpCounter& counter,
                                                    const DixonOptions& opts = {}) {
  Mat<mpz_class> rhs(a.rows(), 1);
  rhs.col(0) = c;
  return dixon_solve_many(a, rhs, rng, counter, opts)[0];
}

// F_p[x] instantiation with the monic linear prime x - a.
inline std::vector<std::vector<Fraction<PolyFp>>> dixon_solve_many(
    const Mat<PolyFp>& a, const Mat<PolyFp>& rhs, std::mt19937_64& rng,
    OpCounter& counter, const DixonOptions& opts = {}) {
  const Index n = a.rows();
  if (n != a.cols()) throw NotSquare("dixon_solve: matrix not square");
  if (a.size() == 0) throw EmptyInput("dixon_solve: empty matrix");
  if (rhs.rows() != n) throw DimensionMismatch("dixon_solve: rhs rows disagree");
  std::uint64_t p = 0;
  for (Index i = 0; i < n && p == 0; ++i)
    for (Index j = 0; j < n && p == 0; ++j)
      if (a(i, j).bound()) p = a(i, j).modulus();
  if (p == 0) throw Error("dixon_solve: matrix has no bound modulus");

  // Degree bounds playing the role of the Hadamard magnitudes.
  std::int64_t dfull = 0;
  bool zero_col = false;
  std::vector<std::int64_t> dcol(static_cast<std::size_t>(n));
  for (Index j = 0; j < n; ++j) {
    std::int64_t best = -1;
    for (Index i = 0; i < n; ++i) best = std::max(best, a(i, j).degree());
    dcol[static_cast<std::size_t>(j)] = best;
    if (best < 0)
      zero_col = true;
    else
      dfull += best;
  }
  std::int64_t dc = 0;
  for (Index j = 0; j < rhs.cols(); ++j)
    for (Index i = 0; i < n; ++i) dc = std::max(dc, rhs(i, j).degree());

  if (!zero_col) {
    std::int64_t bound = dfull;
    for (const auto d : dcol) bound = std::max(bound, dfull - d + dc);
    const int steps = static_cast<int>(2 * bound + 3);

    std::set<std::uint64_t> used;
    for (int tried = 0; tried < opts.max_primes; ++tried) {
      if (used.size() >= p) break;  // every evaluation point rejected
      std::uint64_t point = uniform_below(rng, p);
      while (used.count(point)) point = uniform_below(rng, p);
      used.insert(point);

      Mat<Fp> ap(n, n);
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) ap(i, j) = Fp::make(p, a(i, j).eval(point));
      auto inv = fp_inverse(ap, counter);
      if (!inv) continue;  // det A vanishes at the evaluation point

      LiftingContext<PolyFp> ctx{PolyFp::linear_root(p, point), std::move(*inv),
                                 steps, PolyFp::one(p)};
      for (int s = 0; s < steps; ++s) ctx.modulus *= ctx.prime;

      std::vector<std::vector<Fraction<PolyFp>>> result;
      result.reserve(static_cast<std::size_t>(rhs.cols()));
      bool all_ok = true;
      for (Index j = 0; j < rhs.cols() && all_ok; ++j) {
        const Vec<PolyFp> c = rhs.col(j);
        auto x = detail::lift_column_fx(a, c, ctx, point, counter);
        all_ok = x && solves_exactly(a, c, *x, counter);
        if (all_ok) result.push_back(std::move(*x));
      }
      if (all_ok) return result;
    }

    OpCounter scratch;
    if (is_zero(determinant(a, scratch)))
      throw SingularMatrix("dixon_solve: coefficient matrix is singular");
    if (used.size() >= p)
      throw ExhaustedCandidates("dixon_solve: all evaluation points rejected");
    throw RetryLimit("dixon_solve: retry limit exceeded");
  }

  OpCounter scratch;
  if (is_zero(determinant(a, scratch)))
    throw SingularMatrix("dixon_solve: coefficient matrix is singular");
  throw RetryLimit("dixon_solve: retry limit exceeded");
}

inline RationalVector<PolyFp> dixon_solve(const Mat<PolyFp>& a,
                                                 const Vec<PolyFp>& c,
                                                 std::mt19937_64& rng,
                                                 OpCounter& counter,
                                                 const DixonOptions& opts = {}) {
  Mat<PolyFp> rhs(a.rows(), 1);
  rhs.col(0) = c;
  return dixon_solve_many(a, rhs, rng, counter, opts)[0];
}

}  // namespace exactla

#endif  // EXACTLA_DIXON_HPP
