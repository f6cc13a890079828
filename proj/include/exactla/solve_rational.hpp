#ifndef EXACTLA_SOLVE_RATIONAL_HPP
#define EXACTLA_SOLVE_RATIONAL_HPP

#include <type_traits>
#include <utility>
#include <vector>

#include "exactla/adjoint.hpp"
#include "exactla/dixon.hpp"
#include "exactla/elimination.hpp"
#include "exactla/fraction.hpp"
#include "exactla/matrix.hpp"

namespace exactla {

/*
 * Basis sets of solutions in the fraction field for an arbitrary system
 * A x = c over a domain.
 *
 * After rank-revealing permutations the leading r x r block A0 of the
 * permuted matrix is nonsingular, and the whole solution set is generated by
 * m - r (homogeneous) or m - r + 1 (nonhomogeneous) independent solutions,
 * each obtained from determined r x r solves against A0. All determined
 * solves share a single factorization (adjugate or residue-field inverse),
 * and a basis vector is stored as an R-numerator vector with the reduced
 * scalar denominator of the vector.
 */

template <typename S>
struct SystemInstance {
  Mat<S> A;
  Vec<S> c;
};

struct ConsistencyResult {
  bool consistent = false;
  Index rank = 0;
};

enum class SolveMethod { Auto, Bareiss, Adjoint, Dixon };

struct SolveOptions {
  SolveMethod method = SolveMethod::Auto;
  DixonOptions dixon;
};

template <typename S>
struct BasisVector {
  Vec<S> numerator;  // xbar
  S denominator;     // chi = DEN(x), canonical and nonzero
};

template <typename S>
struct RationalBasis {
  bool homogeneous = false;
  Index rank = 0;
  PermutationMap row_perm;
  PermutationMap col_perm;
  std::vector<BasisVector<S>> vectors;
};

// rank(A | c) = rank(A) decides solvability; the common value is the rank.
template <typename S>
ConsistencyResult consistency_check(const Mat<S>& a, const Vec<S>& c) {
  if (c.size() != a.rows())
    throw DimensionMismatch("consistency_check: rhs length disagrees");
  OpCounter scratch;
  const Index r = bareiss_eliminate(a, scratch).rank;
  Mat<S> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = c;
  const Index raug = bareiss_eliminate(aug, scratch).rank;
  return {raug == r, r};
}

template <typename S>
ConsistencyResult consistency_check(const SystemInstance<S>& sys) {
  return consistency_check(sys.A, sys.c);
}

namespace detail {

// Solve A0 * x = rhs_j for all columns with one shared factorization.
// Auto picks lifting for larger integer blocks, Cramer otherwise.
template <typename S>
std::vector<std::vector<Fraction<S>>> solve_columns(const Mat<S>& a0,
                                                    const Mat<S>& rhs,
                                                    const SolveOptions& opts,
                                                    std::mt19937_64& rng,
                                                    OpCounter& counter) {
  SolveMethod method = opts.method;
  if (method == SolveMethod::Auto || method == SolveMethod::Bareiss) {
    if (std::is_same_v<S, mpz_class> && a0.rows() > 8)
      method = SolveMethod::Dixon;
    else
      method = SolveMethod::Adjoint;
  }
  if (method == SolveMethod::Dixon)
    return dixon_solve_many(a0, rhs, rng, counter, opts.dixon);

  const AdjointResult<S> adj = adjoint(a0, counter);
  const Mat<S> nums = mat_mul(adj.adjugate, rhs, counter);
  std::vector<std::vector<Fraction<S>>> out(static_cast<std::size_t>(rhs.cols()));
  for (Index j = 0; j < rhs.cols(); ++j) {
    auto& col = out[static_cast<std::size_t>(j)];
    col.reserve(static_cast<std::size_t>(a0.rows()));
    for (Index i = 0; i < a0.rows(); ++i)
      col.emplace_back(nums(i, j), adj.det);
  }
  return out;
}

template <typename S>
BasisVector<S> to_basis_vector(const std::vector<Fraction<S>>& x) {
  ClearedVector<S> cl = clear_denominators(x);
  BasisVector<S> v;
  v.numerator = Vec<S>(static_cast<Index>(cl.nums.size()));
  for (Index i = 0; i < v.numerator.size(); ++i)
    v.numerator(i) = std::move(cl.nums[static_cast<std::size_t>(i)]);
  v.denominator = std::move(cl.den);
  return v;
}

}  // namespace detail

// Basis of the null space: m - r vectors T (x_j; e_j) with A0 x_j = -a_j.
template <typename S>
RationalBasis<S> basis_homogeneous(const Mat<S>& a, const SolveOptions& opts,
                                   std::mt19937_64& rng, OpCounter& counter) {
  if (a.size() == 0) throw EmptyInput("basis_homogeneous: empty matrix");
  EliminationResult<S> elim = bareiss_eliminate(a, counter);
  const Index r = elim.rank;
  const Index m = a.cols();
  const S proto = a(0, 0);
  RationalBasis<S> out{true, r, std::move(elim.row_perm), std::move(elim.col_perm), {}};
  if (m == r) return out;  // only the zero solution

  if (r == 0) {
    for (Index j = 0; j < m; ++j) {
      Vec<S> e = Vec<S>::Constant(m, zero_like(proto));
      e(out.col_perm[j]) = one_like(proto);
      out.vectors.push_back({std::move(e), one_like(proto)});
    }
    return out;
  }

  const Mat<S> ap = apply_row_perm(out.row_perm, apply_col_perm(out.col_perm, a));
  const Mat<S> a0 = ap.topLeftCorner(r, r);
  const Mat<S> a1 = ap.topRightCorner(r, m - r);
  const auto cols = detail::solve_columns(a0, a1, opts, rng, counter);

  const Fraction<S> fzero(zero_like(proto));
  const Fraction<S> fone(one_like(proto));
  for (Index j = 0; j < m - r; ++j) {
    std::vector<Fraction<S>> y(static_cast<std::size_t>(m), fzero);
    for (Index i = 0; i < r; ++i)
      y[static_cast<std::size_t>(i)] = -cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    y[static_cast<std::size_t>(r + j)] = fone;
    out.vectors.push_back(detail::to_basis_vector(unpermute_entries(out.col_perm, y)));
  }
  return out;
}

/*
 * Basis of a consistent nonhomogeneous system: the particular solution plus
 * m - r companions built from B = P A0^-1 A1 and b = P A0^-1 c0, where the
 * transposition P moves the last nonzero entry of A0^-1 c0 into the last
 * position. Columns of B with vanishing last entry get the particular
 * direction added so that every emitted vector has a nonzero final
 * coefficient, which makes the m - r + 1 vectors independent.
 */
template <typename S>
RationalBasis<S> basis_nonhomogeneous(const Mat<S>& a, const Vec<S>& c,
                                      const SolveOptions& opts,
                                      std::mt19937_64& rng, OpCounter& counter) {
  if (a.size() == 0) throw EmptyInput("basis_nonhomogeneous: empty matrix");
  if (c.size() != a.rows())
    throw DimensionMismatch("basis_nonhomogeneous: rhs length disagrees");
  if (is_zero_vector(c)) throw ZeroRhs("basis_nonhomogeneous: zero right-hand side");

  EliminationResult<S> elim = bareiss_eliminate(a, counter);
  const Index r = elim.rank;
  {
    OpCounter scratch;
    Mat<S> aug(a.rows(), a.cols() + 1);
    aug.leftCols(a.cols()) = a;
    aug.col(a.cols()) = c;
    if (bareiss_eliminate(aug, scratch).rank != r)
      throw InconsistentSystem("basis_nonhomogeneous: system has no solution");
  }

  const Index m = a.cols();
  const S proto = a(0, 0);
  RationalBasis<S> out{false, r, std::move(elim.row_perm), std::move(elim.col_perm), {}};

  const Mat<S> ap = apply_row_perm(out.row_perm, apply_col_perm(out.col_perm, a));
  const Vec<S> cp = apply_row_perm(out.row_perm, c);
  const Mat<S> a0 = ap.topLeftCorner(r, r);
  Mat<S> rhs(r, 1 + (m - r));
  rhs.col(0) = cp.head(r);
  if (m > r) rhs.rightCols(m - r) = ap.topRightCorner(r, m - r);

  auto cols = detail::solve_columns(a0, rhs, opts, rng, counter);
  std::vector<Fraction<S>>& w = cols[0];

  // single transposition making the last entry of w nonzero
  Index piv = -1;
  for (Index i = r; i-- > 0 && piv < 0;)
    if (!is_zero(w[static_cast<std::size_t>(i)])) piv = i;
  if (piv < 0) throw Error("basis_nonhomogeneous: A0^-1 c0 is zero");  // impossible for consistent c != 0
  for (auto& col : cols)
    std::swap(col[static_cast<std::size_t>(piv)], col[static_cast<std::size_t>(r - 1)]);

  const Fraction<S> beta = w[static_cast<std::size_t>(r - 1)];
  const Fraction<S> fzero(zero_like(proto));

  const auto emit = [&](std::vector<Fraction<S>> z) {
    std::swap(z[static_cast<std::size_t>(piv)], z[static_cast<std::size_t>(r - 1)]);  // Q = diag(P, I)
    out.vectors.push_back(detail::to_basis_vector(unpermute_entries(out.col_perm, z)));
  };

  // particular solution
  {
    std::vector<Fraction<S>> z(static_cast<std::size_t>(m), fzero);
    for (Index i = 0; i < r; ++i) z[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)];
    emit(std::move(z));
  }

  for (Index j = 1; j <= m - r; ++j) {
    const std::vector<Fraction<S>>& bj = cols[static_cast<std::size_t>(j)];
    const Fraction<S>& beta_j = bj[static_cast<std::size_t>(r - 1)];
    const bool in_j = is_zero(beta_j);  // column with vanishing last entry
    const Fraction<S> xi = in_j ? beta : beta / beta_j;
    if (is_zero(xi)) throw Error("basis_nonhomogeneous: xi vanished");  // ruled out by construction

    std::vector<Fraction<S>> z(static_cast<std::size_t>(m), fzero);
    for (Index i = 0; i + 1 < r; ++i)
      z[static_cast<std::size_t>(i)] =
          w[static_cast<std::size_t>(i)] - xi * bj[static_cast<std::size_t>(i)];
    if (in_j) z[static_cast<std::size_t>(r - 1)] = xi;
    z[static_cast<std::size_t>(r - 1 + j)] = xi;
    emit(std::move(z));
  }
  return out;
}

// Dispatch on the shape of the right-hand side.
template <typename S>
RationalBasis<S> rational_basis(const Mat<S>& a, const Vec<S>& c,
                                const SolveOptions& opts, std::mt19937_64& rng,
                                OpCounter& counter) {
  if (is_zero_vector(c)) return basis_homogeneous(a, opts, rng, counter);
  return basis_nonhomogeneous(a, c, opts, rng, counter);
}

// Replays the definition: correct cardinality, every vector solves the
// system exactly, and the stacked numerators have full rank.
template <typename S>
bool verify_basis(const Mat<S>& a, const Vec<S>& c, const RationalBasis<S>& basis) {
  OpCounter scratch;
  const Index m = a.cols();
  const Index r = bareiss_eliminate(a, scratch).rank;
  const Index expected = m - r + (basis.homogeneous ? 0 : 1);
  if (static_cast<Index>(basis.vectors.size()) != expected) return false;
  if (basis.rank != r) return false;
  for (const auto& v : basis.vectors) {
    if (is_zero(v.denominator)) return false;
    if (v.numerator.size() != m) return false;
    const Vec<S> lhs = mat_vec(a, v.numerator, scratch);
    Vec<S> rhs;
    if (basis.homogeneous)
      rhs = Vec<S>::Constant(a.rows(), zero_like(v.denominator));
    else
      rhs = scale_vec(v.denominator, c, scratch);
    if (!equal(lhs, rhs)) return false;
  }
  if (!basis.vectors.empty()) {
    Mat<S> stacked(static_cast<Index>(basis.vectors.size()), m);
    for (Index i = 0; i < stacked.rows(); ++i)
      stacked.row(i) = basis.vectors[static_cast<std::size_t>(i)].numerator.transpose();
    if (bareiss_eliminate(stacked, scratch).rank != stacked.rows()) return false;
  }
  return true;
}

template <typename S>
bool verify_basis(const SystemInstance<S>& sys, const RationalBasis<S>& basis) {
  return verify_basis(sys.A, sys.c, basis);
}

}  // namespace exactla

#endif  // EXACTLA_SOLVE_RATIONAL_HPP
