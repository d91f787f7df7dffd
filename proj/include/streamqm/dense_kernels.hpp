#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <utility>

#include "streamqm/errors.hpp"
#include "streamqm/types.hpp"

namespace streamqm {

template <typename Scalar>
struct QrFactors {
  MatrixX<Scalar> q;  // orthonormal columns
  MatrixX<Scalar> r;  // upper triangular, diag(r) >= 0
};

template <typename Scalar>
struct SvdFactors {
  MatrixX<Scalar> u;
  VectorX<Scalar> sigma;  // descending, nonnegative
  MatrixX<Scalar> v;
};

/// Thin QR of a tall matrix A (c <= N columns): A = Q R with Q (N x c)
/// orthonormal and R (c x c) upper triangular. Signs are fixed so that
/// diag(R) >= 0, which makes the factorization reproducible across runs.
template <typename Derived>
QrFactors<typename Derived::Scalar> thin_qr(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.cols() > a.rows()) {
    throw ArgumentError("thin_qr: matrix has more columns than rows");
  }
  if (!a.allFinite()) {
    throw ArgumentError("thin_qr: input contains non-finite entries");
  }
  const Index n = a.rows(), c = a.cols();
  Eigen::HouseholderQR<MatrixX<Scalar>> qr(a);
  MatrixX<Scalar> q = qr.householderQ() * MatrixX<Scalar>::Identity(n, c);
  MatrixX<Scalar> r =
      qr.matrixQR().topRows(c).template triangularView<Eigen::Upper>();
  for (Index i = 0; i < c; ++i) {
    if (r(i, i) < Scalar(0)) {
      r.row(i) = -r.row(i);
      q.col(i) = -q.col(i);
    }
  }
  return {std::move(q), std::move(r)};
}

/// Thin SVD A = U diag(sigma) V^T with r = min(rows, cols) triplets and
/// sigma sorted descending.
template <typename Derived>
SvdFactors<typename Derived::Scalar> dense_svd(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (!a.allFinite()) {
    throw ArgumentError("dense_svd: input contains non-finite entries");
  }
  Eigen::BDCSVD<MatrixX<Scalar>> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

/// Solves A X = B for symmetric positive definite A via a Cholesky
/// factorization. The factorization is written out explicitly so a failed
/// pivot can be reported; Eigen's LLT does not expose that index.
template <typename Scalar>
MatrixX<Scalar> spd_solve(const Eigen::Ref<const MatrixX<Scalar>>& a,
                          const Eigen::Ref<const MatrixX<Scalar>>& b) {
  const Index m = a.rows();
  if (a.cols() != m) throw ArgumentError("spd_solve: matrix is not square");
  if (b.rows() != m) throw ArgumentError("spd_solve: right-hand side has wrong row count");
  if (m == 0) return MatrixX<Scalar>(0, b.cols());
  const Scalar scale = std::max(Scalar(1), a.cwiseAbs().maxCoeff());
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > Scalar(1e-12) * scale) {
    throw ArgumentError("spd_solve: matrix is not symmetric");
  }

  MatrixX<Scalar> l = MatrixX<Scalar>::Zero(m, m);
  for (Index j = 0; j < m; ++j) {
    const Scalar d = a(j, j) - l.row(j).head(j).squaredNorm();
    if (!(d > Scalar(0))) {
      throw NumericError("spd_solve: non-positive pivot, matrix is not positive definite",
                         static_cast<std::ptrdiff_t>(j));
    }
    l(j, j) = std::sqrt(d);
    const Index tail = m - j - 1;
    if (tail > 0) {
      l.col(j).tail(tail) =
          (a.col(j).tail(tail) -
           l.bottomLeftCorner(tail, j) * l.row(j).head(j).transpose()) /
          l(j, j);
    }
  }

  MatrixX<Scalar> x = l.template triangularView<Eigen::Lower>().solve(b);
  l.transpose().template triangularView<Eigen::Upper>().solveInPlace(x);
  return x;
}

}  // namespace streamqm
