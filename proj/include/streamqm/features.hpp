#pragma once

#include <Eigen/Dense>

#include "streamqm/types.hpp"

namespace streamqm {

/// Length of the condensed quadratic feature vector for a reduced dimension n.
constexpr Index quad_feature_dim(Index n) { return n * (n + 1) / 2; }

/// Condensed Kronecker feature map: all products z_i z_j with i <= j, in
/// row-major upper-triangular order (z1 z1, z1 z2, ..., z1 zn, z2 z2, ...,
/// zn zn). The symmetric duplicates of z (x) z are dropped.
template <typename Derived>
VectorX<typename Derived::Scalar> quad_features(const Eigen::MatrixBase<Derived>& z) {
  using Scalar = typename Derived::Scalar;
  const Index n = z.size();
  VectorX<Scalar> out(quad_feature_dim(n));
  Index row = 0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      out(row++) = z(i) * z(j);
    }
  }
  return out;
}

/// Column-wise application of quad_features to an n x M matrix of reduced
/// coordinates, giving the m x M feature matrix with m = n(n+1)/2.
template <typename Derived>
MatrixX<typename Derived::Scalar> quad_features_matrix(const Eigen::MatrixBase<Derived>& z) {
  using Scalar = typename Derived::Scalar;
  const Index n = z.rows();
  MatrixX<Scalar> out(quad_feature_dim(n), z.cols());
  Index row = 0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      out.row(row++) = z.row(i).cwiseProduct(z.row(j));
    }
  }
  return out;
}

}  // namespace streamqm
