#ifndef EXACTLA_ELIMINATION_HPP
#define EXACTLA_ELIMINATION_HPP

#include <utility>
#include <vector>

#include "exactla/matrix.hpp"
#include "exactla/op_counter.hpp"

namespace exactla {

/*
 * Fraction-free Gaussian elimination (one-step Bareiss).
 *
 * After k completed steps the trailing entries (i, j > k) of the working
 * matrix are the determinants of the leading k x k block of the permuted
 * matrix bordered by row i and column j; the pivots delta_1..delta_r are its
 * leading corner minors. Every division in the update
 *
 *   a(i,j) <- (pivot * a(i,j) - a(i,k) * a(k,j)) / previous_pivot
 *
 * is exact over any commutative domain.
 */
template <typename S>
struct EliminationResult {
  Index rank = 0;
  PermutationMap row_perm;  // S with permuted = apply_row_perm(S, apply_col_perm(T, a))
  PermutationMap col_perm;  // T
  std::vector<S> corner_minors;  // delta_1..delta_r of the permuted matrix
  Mat<S> reduced;
};

template <typename S>
EliminationResult<S> bareiss_eliminate(const Mat<S>& a, OpCounter& counter) {
  if (a.size() == 0) throw EmptyInput("bareiss_eliminate: empty matrix");
  const Index n = a.rows();
  const Index m = a.cols();
  EliminationResult<S> res{0, PermutationMap::identity(n), PermutationMap::identity(m), {}, a};
  Mat<S>& w = res.reduced;
  S prev = one_like(a(0, 0));

  const Index steps = n < m ? n : m;
  for (Index k = 0; k < steps; ++k) {
    // first nonzero candidate in row-major scan of the trailing block
    Index pi = -1, pj = -1;
    for (Index i = k; i < n && pi < 0; ++i)
      for (Index j = k; j < m; ++j)
        if (!is_zero(w(i, j))) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;  // trailing block vanishes: rank found
    if (pi != k) {
      w.row(k).swap(w.row(pi));
      res.row_perm.swap_images(k, pi);
    }
    if (pj != k) {
      w.col(k).swap(w.col(pj));
      res.col_perm.swap_images(k, pj);
    }
    const S pivot = w(k, k);
    res.corner_minors.push_back(pivot);
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < m; ++j)
        w(i, j) = exact_div(pivot * w(i, j) - w(i, k) * w(k, j), prev);
      w(i, k) = zero_like(pivot);
    }
    const std::uint64_t updated =
        static_cast<std::uint64_t>(n - k - 1) * static_cast<std::uint64_t>(m - k - 1);
    counter.multiplications += 2 * updated;
    counter.exact_divisions += updated;
    prev = pivot;
  }
  res.rank = static_cast<Index>(res.corner_minors.size());
  return res;
}

// Exact determinant via Bareiss, with the sign of the pivoting permutations
// applied.
template <typename S>
S determinant(const Mat<S>& a, OpCounter& counter) {
  if (a.rows() != a.cols()) throw NotSquare("determinant: matrix not square");
  if (a.size() == 0) throw EmptyInput("determinant: empty matrix");
  EliminationResult<S> e = bareiss_eliminate(a, counter);
  if (e.rank < a.rows()) return zero_like(a(0, 0));
  S d = e.corner_minors.back();
  if (e.row_perm.sign() * e.col_perm.sign() < 0) d = -d;
  return d;
}

/*
 * Rank-revealing permutations: S*A*T has a nonsingular leading r x r block
 * with all leading corner minors nonzero. Deterministic; callers that need a
 * randomized re-draw compose random pre-permutations themselves.
 */
struct RankProfile {
  Index rank = 0;
  PermutationMap row_perm;
  PermutationMap col_perm;
};

template <typename S>
RankProfile rank_profile(const Mat<S>& a) {
  OpCounter scratch;
  EliminationResult<S> e = bareiss_eliminate(a, scratch);
  return {e.rank, std::move(e.row_perm), std::move(e.col_perm)};
}

}  // namespace exactla

#endif  // EXACTLA_ELIMINATION_HPP
