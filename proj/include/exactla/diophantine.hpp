#ifndef EXACTLA_DIOPHANTINE_HPP
#define EXACTLA_DIOPHANTINE_HPP

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "exactla/solve_rational.hpp"

namespace exactla {

/*
 * Solutions inside the domain R^m.
 *
 * Scaling clears denominators for homogeneous systems. For nonhomogeneous
 * systems the denominators chi_1..chi_h of a rational basis decide: when the
 * ideal they generate is the whole ring, a witness q with <chi, q> = 1 turns
 * the basis into a Diophantine solution <xbar, q>, and substituting it for a
 * basis member with q_s != 0 yields a basis with chi_1 = 1 from which an
 * all-integral basis follows. When the witness fails the system is retried
 * under fresh random permutations; a determined system is decided directly by
 * the integrality of its unique solution.
 */

// chi = LCM of the reduced entry denominators, xbar = chi * x entrywise.
template <typename S>
std::pair<Vec<S>, S> denominator(const std::vector<Fraction<S>>& x) {
  ClearedVector<S> cl = clear_denominators(x);
  Vec<S> xbar(static_cast<Index>(cl.nums.size()));
  for (Index i = 0; i < xbar.size(); ++i)
    xbar(i) = std::move(cl.nums[static_cast<std::size_t>(i)]);
  return {std::move(xbar), std::move(cl.den)};
}

template <typename S>
struct UnitWitness {
  std::optional<std::vector<S>> q;  // coefficients with <chi, q> = 1, if unit
  S gcd;                            // canonical gcd of the generators
};

// Chained extended GCD over the denominators (Euclidean domains only).
template <typename S>
UnitWitness<S> unit_ideal_witness(const std::vector<S>& chi) {
  if (chi.empty()) throw EmptyInput("unit_ideal_witness: empty input");
  for (const S& x : chi)
    if (is_zero(x)) throw ZeroElement("unit_ideal_witness: zero denominator");
  S g = canonical_associate(chi[0]);
  std::vector<S> coeff{unit_to_canonical(chi[0])};
  for (std::size_t i = 1; i < chi.size(); ++i) {
    if (is_one(g)) {
      coeff.push_back(zero_like(g));
      continue;
    }
    GcdExt<S> e = gcd_ext(g, chi[i]);
    for (S& w : coeff) w = w * e.u;
    coeff.push_back(e.v);
    g = std::move(e.g);
  }
  UnitWitness<S> out{std::nullopt, std::move(g)};
  if (is_one(out.gcd)) out.q = std::move(coeff);
  return out;
}

// <xbar, q> for a witness with <chi, q> = 1: a solution with entries in R.
template <typename S>
Vec<S> diophantine_solution(const RationalBasis<S>& basis, const std::vector<S>& q) {
  const std::size_t h = basis.vectors.size();
  if (q.size() != h)
    throw WitnessInvalid("diophantine_solution: witness length disagrees");
  if (h == 0) throw EmptyInput("diophantine_solution: empty basis");
  S dot = zero_like(basis.vectors[0].denominator);
  for (std::size_t i = 0; i < h; ++i) dot += q[i] * basis.vectors[i].denominator;
  if (!is_one(dot))
    throw WitnessInvalid("diophantine_solution: <chi, q> is not 1");
  const Index m = basis.vectors[0].numerator.size();
  Vec<S> z = Vec<S>::Constant(m, zero_like(dot));
  for (std::size_t i = 0; i < h; ++i) {
    if (is_zero(q[i])) continue;
    for (Index k = 0; k < m; ++k) z(k) += q[i] * basis.vectors[i].numerator(k);
  }
  return z;
}

// Given chi_1 = 1, the vectors xbar_1 and xbar_i - xbar_1 (chi_i - 1) form a
// basis lying entirely in R^m.
template <typename S>
std::vector<Vec<S>> diophantine_basis(const RationalBasis<S>& basis) {
  if (basis.vectors.empty())
    throw PreconditionViolated("diophantine_basis: empty basis");
  if (!is_one(basis.vectors[0].denominator))
    throw PreconditionViolated("diophantine_basis: chi_1 is not 1");
  std::vector<Vec<S>> out;
  out.reserve(basis.vectors.size());
  const Vec<S>& first = basis.vectors[0].numerator;
  out.push_back(first);
  for (std::size_t i = 1; i < basis.vectors.size(); ++i) {
    const S f = basis.vectors[i].denominator - one_like(basis.vectors[i].denominator);
    Vec<S> z = basis.vectors[i].numerator;
    if (!is_zero(f))
      for (Index k = 0; k < z.size(); ++k) z(k) -= f * first(k);
    out.push_back(std::move(z));
  }
  return out;
}

enum class DiophantineStatus { Basis, NoSolution, Inconclusive };

template <typename S>
struct DiophantineOutcome {
  DiophantineStatus status = DiophantineStatus::Basis;
  std::vector<Vec<S>> basis;
  Index rank = 0;
  int iterations = 0;
};

// Postcondition replay for a Diophantine basis: cardinality, exact solving,
// independence. Entries are in R by construction of the type.
template <typename S>
bool verify_diophantine_basis(const Mat<S>& a, const Vec<S>& c,
                              const std::vector<Vec<S>>& basis, Index rank) {
  OpCounter scratch;
  const Index expected = a.cols() - rank + (is_zero_vector(c) ? 0 : 1);
  if (static_cast<Index>(basis.size()) != expected) return false;
  for (const Vec<S>& z : basis) {
    if (z.size() != a.cols()) return false;
    if (!equal(mat_vec(a, z, scratch), c)) return false;
  }
  if (!basis.empty()) {
    Mat<S> stacked(static_cast<Index>(basis.size()), a.cols());
    for (Index i = 0; i < stacked.rows(); ++i)
      stacked.row(i) = basis[static_cast<std::size_t>(i)].transpose();
    if (bareiss_eliminate(stacked, scratch).rank != stacked.rows()) return false;
  }
  return true;
}

namespace detail {

// Default iteration budget, a generous multiple of the expected number of
// random rational bases needed before the denominator ideal is the unit
// ideal.
template <typename S>
int default_max_iters(const Mat<S>& a, const Vec<S>& c, Index rank) {
  double norm = 1.0;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) norm = std::max(norm, norm_hint(a(i, j)));
  for (Index i = 0; i < c.size(); ++i) norm = std::max(norm, norm_hint(c(i)));
  const double n = static_cast<double>(a.rows());
  const double denom = static_cast<double>(a.cols() - rank + 1);
  const double t =
      4.0 * (std::log2(std::max(n, 1.0)) + std::log2(std::log2(norm + 16.0))) / denom;
  const int iters = static_cast<int>(std::ceil(t)) + 4;
  return iters < 4 ? 4 : iters;
}

}  // namespace detail

template <typename S>
DiophantineOutcome<S> solve_diophantine(const Mat<S>& a, const Vec<S>& c,
                                        std::mt19937_64& rng, int max_iters = 0,
                                        const SolveOptions& opts = {}) {
  const ConsistencyResult cons = consistency_check(a, c);
  if (!cons.consistent)
    throw InconsistentSystem("solve_diophantine: system has no solution");
  const Index r = cons.rank;
  const Index m = a.cols();
  OpCounter counter;
  DiophantineOutcome<S> out{DiophantineStatus::Basis, {}, r, 0};

  if (is_zero_vector(c)) {
    RationalBasis<S> rb = basis_homogeneous(a, opts, rng, counter);
    for (auto& v : rb.vectors) out.basis.push_back(std::move(v.numerator));
    return out;
  }

  if (r == m) {
    RationalBasis<S> rb = basis_nonhomogeneous(a, c, opts, rng, counter);
    out.iterations = 1;
    if (is_one(rb.vectors[0].denominator)) {
      out.basis.push_back(std::move(rb.vectors[0].numerator));
      return out;
    }
    out.status = DiophantineStatus::NoSolution;  // unique solution is fractional
    return out;
  }

  if (max_iters <= 0) max_iters = detail::default_max_iters(a, c, r);
  for (int it = 1; it <= max_iters; ++it) {
    out.iterations = it;
    const PermutationMap sigma = PermutationMap::random(a.rows(), rng);
    const PermutationMap tau = PermutationMap::random(m, rng);
    const Mat<S> a2 = apply_row_perm(sigma, apply_col_perm(tau, a));
    const Vec<S> c2 = apply_row_perm(sigma, c);
    RationalBasis<S> rb = basis_nonhomogeneous(a2, c2, opts, rng, counter);
    for (auto& v : rb.vectors)
      v.numerator = unpermute_entries(tau, Vec<S>(v.numerator));

    std::vector<S> chi;
    chi.reserve(rb.vectors.size());
    for (const auto& v : rb.vectors) chi.push_back(v.denominator);
    UnitWitness<S> w = unit_ideal_witness(chi);
    if (!w.q) continue;

    Vec<S> z = diophantine_solution(rb, *w.q);
    std::size_t s = 0;
    while (is_zero((*w.q)[s])) ++s;  // exists: <chi, q> = 1 forces q != 0
    rb.vectors[s] = BasisVector<S>{std::move(z), one_like(chi[0])};
    std::swap(rb.vectors[0], rb.vectors[s]);

    out.basis = diophantine_basis(rb);
    if (!verify_diophantine_basis(a, c, out.basis, r))
      throw Error("solve_diophantine: postcondition failed");  // would be a bug
    return out;
  }
  out.status = DiophantineStatus::Inconclusive;
  out.basis.clear();
  return out;
}

template <typename S>
DiophantineOutcome<S> solve_diophantine(const SystemInstance<S>& sys,
                                        std::mt19937_64& rng, int max_iters = 0,
                                        const SolveOptions& opts = {}) {
  return solve_diophantine(sys.A, sys.c, rng, max_iters, opts);
}

}  // namespace exactla

#endif  // EXACTLA_DIOPHANTINE_HPP
