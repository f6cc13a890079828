#ifndef EXACTLA_MATRIX_HPP
#define EXACTLA_MATRIX_HPP

#include <Eigen/Core>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "exactla/errors.hpp"
#include "exactla/fraction.hpp"
#include "exactla/integers.hpp"
#include "exactla/op_counter.hpp"
#include "exactla/poly_fp.hpp"
#include "exactla/prime_field.hpp"
#include "exactla/rand_util.hpp"

// Eigen scalar adapters for the exact element types. Only storage, block
// views and coefficient-wise sums are used; every counted product goes
// through mat_mul below.
namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 100
  };
};

template <>
struct NumTraits<exactla::Fp> : GenericNumTraits<exactla::Fp> {
  using Real = exactla::Fp;
  using NonInteger = exactla::Fp;
  using Nested = exactla::Fp;
  static inline Real epsilon() { return exactla::Fp(0); }
  static inline Real dummy_precision() { return exactla::Fp(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 0,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 4,
    MulCost = 8
  };
};

template <>
struct NumTraits<exactla::PolyFp> : GenericNumTraits<exactla::PolyFp> {
  using Real = exactla::PolyFp;
  using NonInteger = exactla::PolyFp;
  using Nested = exactla::PolyFp;
  static inline Real epsilon() { return exactla::PolyFp(0); }
  static inline Real dummy_precision() { return exactla::PolyFp(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 0,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 100,
    MulCost = 300
  };
};

}  // namespace Eigen

namespace exactla {

using Index = Eigen::Index;

template <typename S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <typename S>
Mat<S> zeros_like(Index rows, Index cols, const S& proto) {
  return Mat<S>::Constant(rows, cols, zero_like(proto));
}

template <typename S>
Mat<S> identity_like(Index n, const S& proto) {
  Mat<S> m = zeros_like(n, n, proto);
  const S one = one_like(proto);
  for (Index i = 0; i < n; ++i) m(i, i) = one;
  return m;
}

template <typename S>
bool equal(const Mat<S>& a, const Mat<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <typename S>
bool equal(const Vec<S>& a, const Vec<S>& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (!(a(i) == b(i))) return false;
  return true;
}

template <typename S>
bool is_zero_matrix(const Mat<S>& a) {
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!is_zero(a(i, j))) return false;
  return true;
}

template <typename S>
bool is_zero_vector(const Vec<S>& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) return false;
  return true;
}

// Classical product; exactly a.rows*a.cols*b.cols element multiplications,
// recorded on the counter.
template <typename S>
Mat<S> mat_mul(const Mat<S>& a, const Mat<S>& b, OpCounter& counter) {
  if (a.cols() != b.rows())
    throw DimensionMismatch("mat_mul: inner dimensions disagree");
  if (a.size() == 0 || b.size() == 0)
    throw DimensionMismatch("mat_mul: empty operand");
  const S zero = zero_like(a(0, 0));
  Mat<S> r(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < b.cols(); ++j) {
      S acc = zero;
      for (Index k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      r(i, j) = std::move(acc);
    }
  }
  counter.multiplications += static_cast<std::uint64_t>(a.rows()) *
                             static_cast<std::uint64_t>(a.cols()) *
                             static_cast<std::uint64_t>(b.cols());
  return r;
}

template <typename S>
Vec<S> mat_vec(const Mat<S>& a, const Vec<S>& v, OpCounter& counter) {
  if (a.cols() != v.size())
    throw DimensionMismatch("mat_vec: inner dimensions disagree");
  const S zero = zero_like(a(0, 0));
  Vec<S> r(a.rows());
  for (Index i = 0; i < a.rows(); ++i) {
    S acc = zero;
    for (Index k = 0; k < a.cols(); ++k) acc += a(i, k) * v(k);
    r(i) = std::move(acc);
  }
  counter.multiplications += static_cast<std::uint64_t>(a.rows()) *
                             static_cast<std::uint64_t>(a.cols());
  return r;
}

// Scalar-by-matrix product, tallied separately from block products.
template <typename S>
Mat<S> scale_mat(const S& s, const Mat<S>& a, OpCounter& counter) {
  Mat<S> r(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) r(i, j) = s * a(i, j);
  counter.scalings += static_cast<std::uint64_t>(a.size());
  return r;
}

template <typename S>
Vec<S> scale_vec(const S& s, const Vec<S>& v, OpCounter& counter) {
  Vec<S> r(v.size());
  for (Index i = 0; i < v.size(); ++i) r(i) = s * v(i);
  counter.scalings += static_cast<std::uint64_t>(v.size());
  return r;
}

// Entrywise exact division by a scalar.
template <typename S>
Mat<S> exact_div_mat(const Mat<S>& a, const S& d, OpCounter& counter) {
  Mat<S> r(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) r(i, j) = exact_div(a(i, j), d);
  counter.exact_divisions += static_cast<std::uint64_t>(a.size());
  return r;
}

template <typename S>
struct BlockSplit {
  Mat<S> A;  // top-left
  Mat<S> C;  // top-right
  Mat<S> B;  // bottom-left
  Mat<S> D;  // bottom-right
};

// Split as [[A, C], [B, D]] with A of size row_cut x col_cut.
template <typename S>
BlockSplit<S> split_blocks(const Mat<S>& a, Index row_cut, Index col_cut) {
  if (row_cut <= 0 || row_cut >= a.rows() || col_cut <= 0 || col_cut >= a.cols())
    throw BadCut("split_blocks: cut outside the matrix");
  BlockSplit<S> s;
  s.A = a.topLeftCorner(row_cut, col_cut);
  s.C = a.topRightCorner(row_cut, a.cols() - col_cut);
  s.B = a.bottomLeftCorner(a.rows() - row_cut, col_cut);
  s.D = a.bottomRightCorner(a.rows() - row_cut, a.cols() - col_cut);
  return s;
}

template <typename S>
Mat<S> join_blocks(const Mat<S>& A, const Mat<S>& C, const Mat<S>& B, const Mat<S>& D) {
  if (A.rows() != C.rows() || B.rows() != D.rows() || A.cols() != B.cols() ||
      C.cols() != D.cols())
    throw DimensionMismatch("join_blocks: block shapes disagree");
  Mat<S> m(A.rows() + B.rows(), A.cols() + C.cols());
  m.topLeftCorner(A.rows(), A.cols()) = A;
  m.topRightCorner(C.rows(), C.cols()) = C;
  m.bottomLeftCorner(B.rows(), B.cols()) = B;
  m.bottomRightCorner(D.rows(), D.cols()) = D;
  return m;
}

/*
 * Permutation of {0, ..., n-1} stored as an image vector. Applying a map p to
 * the rows of M yields R with R(i, :) = M(p[i], :), i.e. left-multiplication
 * by the permutation matrix P with P(i, p[i]) = 1; column application is
 * right-multiplication by its transpose. No multiplications are counted.
 */
class PermutationMap {
 public:
  explicit PermutationMap(std::vector<Index> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (Index v : image_) {
      if (v < 0 || static_cast<std::size_t>(v) >= image_.size() || seen[v])
        throw Error("PermutationMap: image is not a bijection");
      seen[v] = true;
    }
  }

  static PermutationMap identity(Index n) {
    std::vector<Index> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), Index(0));
    return PermutationMap(std::move(im));
  }

  static PermutationMap transposition(Index n, Index i, Index j) {
    PermutationMap p = identity(n);
    std::swap(p.image_[i], p.image_[j]);
    return p;
  }

  static PermutationMap random(Index n, std::mt19937_64& rng) {
    PermutationMap p = identity(n);
    for (Index i = n - 1; i > 0; --i) {
      const Index j = static_cast<Index>(uniform_below(rng, static_cast<std::uint64_t>(i) + 1));
      std::swap(p.image_[i], p.image_[j]);
    }
    return p;
  }

  Index size() const { return static_cast<Index>(image_.size()); }
  Index operator[](Index i) const { return image_[static_cast<std::size_t>(i)]; }

  void swap_images(Index i, Index j) {
    std::swap(image_[static_cast<std::size_t>(i)], image_[static_cast<std::size_t>(j)]);
  }

  PermutationMap inverse() const {
    std::vector<Index> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i)
      inv[static_cast<std::size_t>(image_[i])] = static_cast<Index>(i);
    return PermutationMap(std::move(inv));
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < image_.size(); ++i)
      if (image_[i] != static_cast<Index>(i)) return false;
    return true;
  }

  // +1 or -1, by cycle decomposition.
  int sign() const {
    std::vector<bool> seen(image_.size(), false);
    int s = 1;
    for (std::size_t i = 0; i < image_.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      std::size_t j = i;
      while (!seen[j]) {
        seen[j] = true;
        j = static_cast<std::size_t>(image_[j]);
        ++len;
      }
      if (len % 2 == 0) s = -s;
    }
    return s;
  }

 private:
  std::vector<Index> image_;
};

template <typename S>
Mat<S> apply_row_perm(const PermutationMap& p, const Mat<S>& a) {
  if (p.size() != a.rows())
    throw DimensionMismatch("apply_row_perm: size disagrees with rows");
  Mat<S> r(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i) r.row(i) = a.row(p[i]);
  return r;
}

template <typename S>
Vec<S> apply_row_perm(const PermutationMap& p, const Vec<S>& v) {
  if (p.size() != v.size())
    throw DimensionMismatch("apply_row_perm: size disagrees with vector");
  Vec<S> r(v.size());
  for (Index i = 0; i < v.size(); ++i) r(i) = v(p[i]);
  return r;
}

template <typename S>
Mat<S> apply_col_perm(const PermutationMap& p, const Mat<S>& a) {
  if (p.size() != a.cols())
    throw DimensionMismatch("apply_col_perm: size disagrees with cols");
  Mat<S> r(a.rows(), a.cols());
  for (Index j = 0; j < a.cols(); ++j) r.col(j) = a.col(p[j]);
  return r;
}

// Undo a column permutation at the solution level: if y solves the
// column-permuted system then x with x[p[k]] = y[k] solves the original.
template <typename T>
std::vector<T> unpermute_entries(const PermutationMap& p, const std::vector<T>& y) {
  std::vector<T> x(y.size());
  for (std::size_t k = 0; k < y.size(); ++k)
    x[static_cast<std::size_t>(p[static_cast<Index>(k)])] = y[k];
  return x;
}

template <typename S>
Vec<S> unpermute_entries(const PermutationMap& p, const Vec<S>& y) {
  Vec<S> x(y.size());
  for (Index k = 0; k < y.size(); ++k) x(p[k]) = y(k);
  return x;
}

inline Index next_pow2(Index n) {
  Index p = 1;
  while (p < n) p *= 2;
  return p;
}

// diag(a, I_k) of order 2^ceil(log2 n). Determinant is unchanged and the
// adjugate of the result is diag(adj(a), det(a) * I_k).
template <typename S>
Mat<S> pad_to_pow2(const Mat<S>& a) {
  if (a.rows() != a.cols()) throw NotSquare("pad_to_pow2: matrix not square");
  if (a.rows() == 0) throw EmptyInput("pad_to_pow2: empty matrix");
  const Index n = a.rows();
  const Index m = next_pow2(n);
  if (m == n) return a;
  Mat<S> r = zeros_like(m, m, a(0, 0));
  r.topLeftCorner(n, n) = a;
  const S one = one_like(a(0, 0));
  for (Index i = n; i < m; ++i) r(i, i) = one;
  return r;
}

}  // namespace exactla

#endif  // EXACTLA_MATRIX_HPP
