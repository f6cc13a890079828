#ifndef EXACTLA_ADJOINT_HPP
#define EXACTLA_ADJOINT_HPP

#include <utility>

#include "exactla/elimination.hpp"
#include "exactla/matrix.hpp"
#include "exactla/op_counter.hpp"

namespace exactla {

/*
 * Adjugate computation by recursive block factorization.
 *
 * The recursion works on matrices of bordered minors. A frame receives a
 * matrix M whose entries are the minors of some underlying matrix bordering
 * its leading prefix, together with the prefix corner minor d_pre, and
 * returns the prefix-scaled adjugate
 *
 *     N = d_pre^(2-q) * adj(M),   q = order of M,
 *
 * whose entries are again minors of the underlying matrix, hence in R, and
 * the corner minor at the end of the frame. For the whole matrix d_pre = 1
 * and N is the adjugate itself.
 *
 * A frame splits M = [[A, C], [B, D]], recurses on A for F (scaled adjugate)
 * and the mid corner minor d_mid, replaces the complement by
 *
 *     M' = (d_mid * D - B * (F*C / d_pre)) / d_pre,
 *
 * recurses on M' for G, and assembles the four factors of the adjugate
 * factorization with six block products in total. Every scalar division is
 * exact; a division failure indicates a bug, not bad input.
 *
 * Zero interior corner minors abort the computation (handled by adjoint()
 * with a rank-revealing pre-permutation); a singular input has no
 * factorization of this form at all.
 */

namespace detail {

// Internal control-flow signal: an interior corner minor vanished on the
// unpermuted fast path.
struct ZeroCornerMinor {};

template <typename S>
std::pair<Mat<S>, S> scaled_adjoint(const Mat<S>& m, const S& d_pre,
                                    OpCounter& counter, bool check_frames) {
  const Index q = m.rows();
  if (q == 1) return {Mat<S>::Constant(1, 1, d_pre), m(0, 0)};
  if (q == 2) {
    Mat<S> n(2, 2);
    n(0, 0) = m(1, 1);
    n(0, 1) = -m(0, 1);
    n(1, 0) = -m(1, 0);
    n(1, 1) = m(0, 0);
    counter.scalings += 2;
    S det2 = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    counter.exact_divisions += 1;
    S delta = exact_div(det2, d_pre);
    return {std::move(n), std::move(delta)};
  }

  const Index u = q / 2;
  const BlockSplit<S> blk = split_blocks(m, u, u);

  auto [f, d_mid] = scaled_adjoint(blk.A, d_pre, counter, check_frames);
  if (is_zero(d_mid)) throw ZeroCornerMinor{};
  if (check_frames) {
    OpCounter scratch;
    const Mat<S> fa = mat_mul(f, blk.A, scratch);
    const Mat<S> want = scale_mat(S(d_pre * d_mid), identity_like(u, d_pre), scratch);
    if (!equal(fa, want))
      throw Error("scaled_adjoint: frame identity F*A = d_pre*d_mid*I violated");
  }

  Mat<S> fc = exact_div_mat(mat_mul(f, blk.C, counter), d_pre, counter);
  Mat<S> next = exact_div_mat(
      Mat<S>(scale_mat(d_mid, blk.D, counter) - mat_mul(blk.B, fc, counter)),
      d_pre, counter);

  auto [g, d_end] = scaled_adjoint(next, d_mid, counter, check_frames);

  Mat<S> bf = exact_div_mat(mat_mul(blk.B, f, counter), d_pre, counter);
  Mat<S> fcg = exact_div_mat(mat_mul(fc, g, counter), d_mid, counter);
  Mat<S> tl = exact_div_mat(
      Mat<S>(scale_mat(d_end, f, counter) + mat_mul(fcg, bf, counter)), d_mid,
      counter);
  Mat<S> bl = -exact_div_mat(mat_mul(g, bf, counter), d_mid, counter);
  Mat<S> tr = -fcg;
  return {join_blocks(tl, tr, bl, g), std::move(d_end)};
}

}  // namespace detail

template <typename S>
struct AdjointResult {
  Mat<S> adjugate;
  S det;
  OpCounter ops;  // operations performed by this call
  bool fast_path = true;
  PermutationMap row_perm;  // pre-permutation used; identity on the fast path
  PermutationMap col_perm;
};

// Frame identity F*A = d_pre*d_mid*I is asserted at every recursion frame in
// debug builds; the check runs on a scratch counter so tallies stay exact.
struct AdjointOptions {
#ifdef NDEBUG
  bool check_frames = false;
#else
  bool check_frames = true;
#endif
};

template <typename S>
AdjointResult<S> adjoint(const Mat<S>& a, OpCounter& counter,
                         const AdjointOptions& opts = {}) {
  if (a.rows() != a.cols()) throw NotSquare("adjoint: matrix not square");
  if (a.size() == 0) throw EmptyInput("adjoint: empty matrix");
  const Index n = a.rows();
  const OpCounter before = counter;
  const S one = one_like(a(0, 0));

  // Fast path: no permutations, valid whenever no interior corner minor of
  // the padded matrix vanishes (always the case for generic input).
  try {
    auto [nmat, det] = detail::scaled_adjoint(pad_to_pow2(a), one, counter,
                                              opts.check_frames);
    if (is_zero(det)) throw SingularMatrix("adjoint: matrix is singular");
    return {Mat<S>(nmat.topLeftCorner(n, n)), std::move(det),
            counter.delta_since(before), true, PermutationMap::identity(n),
            PermutationMap::identity(n)};
  } catch (const detail::ZeroCornerMinor&) {
  }

  // Slow path: move a nonsingular prefix into place; all corner minors of the
  // permuted matrix are then nonzero and the recursion cannot signal again.
  EliminationResult<S> elim = bareiss_eliminate(a, counter);
  if (elim.rank < n) throw SingularMatrix("adjoint: matrix is singular");
  const Mat<S> ap = apply_row_perm(elim.row_perm, apply_col_perm(elim.col_perm, a));
  auto [nmat, det] =
      detail::scaled_adjoint(pad_to_pow2(ap), one, counter, opts.check_frames);
  // adj(P A Q) = det(P) det(Q) Q^-1... unwound at the entry level:
  // adj(A) = sign * rows<-t^-1, cols<-s^-1 of adj(S A T).
  const Mat<S> unpadded = nmat.topLeftCorner(n, n);
  Mat<S> adj = apply_row_perm(elim.col_perm.inverse(),
                              apply_col_perm(elim.row_perm.inverse(), unpadded));
  S d = std::move(det);
  if (elim.row_perm.sign() * elim.col_perm.sign() < 0) {
    adj = -adj;
    d = -d;
  }
  return {std::move(adj), std::move(d), counter.delta_since(before), false,
          std::move(elim.row_perm), std::move(elim.col_perm)};
}

// One update step in isolation: (delta_s * D - B*F*C) / delta_prev, the
// matrix of next-level bordered minors. With delta_prev = 1 this is the
// undivided first-level form.
template <typename S>
Mat<S> schur_update(const S& delta_s, const S& delta_prev, const Mat<S>& b,
                    const Mat<S>& f, const Mat<S>& c, const Mat<S>& d,
                    OpCounter& counter) {
  if (f.rows() != f.cols() || b.cols() != f.rows() || c.rows() != f.cols() ||
      d.rows() != b.rows() || d.cols() != c.cols())
    throw DimensionMismatch("schur_update: block shapes disagree");
  const Mat<S> bfc = mat_mul(b, mat_mul(f, c, counter), counter);
  return exact_div_mat(Mat<S>(scale_mat(delta_s, d, counter) - bfc), delta_prev,
                       counter);
}

/*
 * Product of the four factor matrices of one frame, in the prefix-scaled
 * representation: f is the d_prefix-scaled adjugate of the upper-left block,
 * g the d_mid-scaled adjugate of the updated complement, and the result is
 * the d_prefix-scaled adjugate of the whole frame. Five block products as
 * written; the recursion's fused path shares two of them with the update
 * step, for six per frame in total.
 */
template <typename S>
Mat<S> assemble_factors(const Mat<S>& f, const Mat<S>& g, const Mat<S>& b,
                        const Mat<S>& c, const S& d_prefix, const S& d_mid,
                        const S& d_end, OpCounter& counter) {
  if (f.rows() != f.cols() || g.rows() != g.cols() || b.rows() != g.rows() ||
      b.cols() != f.cols() || c.rows() != f.rows() || c.cols() != g.cols())
    throw DimensionMismatch("assemble_factors: block shapes disagree");
  Mat<S> fc = exact_div_mat(mat_mul(f, c, counter), d_prefix, counter);
  Mat<S> bf = exact_div_mat(mat_mul(b, f, counter), d_prefix, counter);
  Mat<S> fcg = exact_div_mat(mat_mul(fc, g, counter), d_mid, counter);
  Mat<S> tl = exact_div_mat(
      Mat<S>(scale_mat(d_end, f, counter) + mat_mul(fcg, bf, counter)), d_mid,
      counter);
  Mat<S> bl = -exact_div_mat(mat_mul(g, bf, counter), d_mid, counter);
  Mat<S> tr = -fcg;
  return join_blocks(tl, tr, bl, g);
}

}  // namespace exactla

#endif  // EXACTLA_ADJOINT_HPP
