#ifndef EXACTLA_TESTS_ORACLES_HPP
#define EXACTLA_TESTS_ORACLES_HPP

// Brute-force reference implementations used as independent oracles. These
// deliberately share no code with the library's computational paths: all
// determinants are Laplace expansions and rank is division-based Gaussian
// elimination over the fraction field.

#include <vector>

#include "exactla/fraction.hpp"
#include "exactla/matrix.hpp"

namespace oracles {

using exactla::Index;
using exactla::Mat;
using exactla::is_zero;
using exactla::one_like;
using exactla::zero_like;

template <typename S>
Mat<S> submatrix_excluding(const Mat<S>& a, Index row, Index col) {
  Mat<S> r(a.rows() - 1, a.cols() - 1);
  Index ri = 0;
  for (Index i = 0; i < a.rows(); ++i) {
    if (i == row) continue;
    Index rj = 0;
    for (Index j = 0; j < a.cols(); ++j) {
      if (j == col) continue;
      r(ri, rj) = a(i, j);
      ++rj;
    }
    ++ri;
  }
  return r;
}

// Determinant by first-row Laplace expansion.
template <typename S>
S laplace_det(const Mat<S>& a) {
  const Index n = a.rows();
  if (n == 1) return a(0, 0);
  S acc = zero_like(a(0, 0));
  for (Index j = 0; j < n; ++j) {
    if (is_zero(a(0, j))) continue;
    const S term = a(0, j) * laplace_det(submatrix_excluding(a, Index(0), j));
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

// det of the leading k x k block; k = 0 gives the ring identity.
template <typename S>
S leading_minor_det(const Mat<S>& a, Index k) {
  if (k == 0) return one_like(a(0, 0));
  return laplace_det(Mat<S>(a.topLeftCorner(k, k)));
}

// det of the leading k x k block bordered by row i and column j (i, j >= k);
// a (k+1) x (k+1) determinant.
template <typename S>
S bordered_minor_det(const Mat<S>& a, Index k, Index i, Index j) {
  Mat<S> m(k + 1, k + 1);
  for (Index r = 0; r < k; ++r) {
    for (Index c = 0; c < k; ++c) m(r, c) = a(r, c);
    m(r, k) = a(r, j);
  }
  for (Index c = 0; c < k; ++c) m(k, c) = a(i, c);
  m(k, k) = a(i, j);
  return laplace_det(m);
}

// Transpose of the cofactor matrix.
template <typename S>
Mat<S> cofactor_adjugate(const Mat<S>& a) {
  const Index n = a.rows();
  Mat<S> adj(n, n);
  if (n == 1) {
    adj(0, 0) = one_like(a(0, 0));
    return adj;
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      S minor = laplace_det(submatrix_excluding(a, j, i));
      adj(i, j) = ((i + j) % 2 == 0) ? minor : S(-minor);
    }
  }
  return adj;
}

// Schoolbook product, written independently of the library's mat_mul.
template <typename S>
Mat<S> schoolbook_product(const Mat<S>& a, const Mat<S>& b) {
  Mat<S> r(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < b.cols(); ++j) {
      S acc = zero_like(a(0, 0));
      for (Index k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      r(i, j) = acc;
    }
  }
  return r;
}

// Rank by division-based Gaussian elimination over the fraction field; an
// algorithmically different route from the library's fraction-free
// elimination.
template <typename S>
Index fraction_gauss_rank(const Mat<S>& a) {
  using F = exactla::Fraction<S>;
  const Index n = a.rows(), m = a.cols();
  std::vector<std::vector<F>> w(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    w[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(m));
    for (Index j = 0; j < m; ++j) w[static_cast<std::size_t>(i)].emplace_back(a(i, j));
  }
  Index rank = 0;
  Index row = 0;
  for (Index col = 0; col < m && row < n; ++col) {
    Index piv = -1;
    for (Index i = row; i < n && piv < 0; ++i)
      if (!is_zero(w[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)])) piv = i;
    if (piv < 0) continue;
    std::swap(w[static_cast<std::size_t>(piv)], w[static_cast<std::size_t>(row)]);
    const F inv_pivot =
        F(one_like(a(0, 0))) / w[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
    for (Index j = col; j < m; ++j)
      w[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] =
          w[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] * inv_pivot;
    for (Index i = row + 1; i < n; ++i) {
      const F f = w[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
      if (is_zero(f)) continue;
      for (Index j = col; j < m; ++j)
        w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
            f * w[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
    }
    ++rank;
    ++row;
  }
  return rank;
}

}  // namespace oracles

#endif  // EXACTLA_TESTS_ORACLES_HPP
