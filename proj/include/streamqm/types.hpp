#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace streamqm {

using Index = Eigen::Index;
using IndexList = std::vector<Index>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// One block of snapshot columns, the unit of ingestion. `index` is the
/// position of the chunk in its stream, used in diagnostics.
template <typename Scalar>
struct Chunk {
  MatrixX<Scalar> data;
  std::int64_t index = 0;

  Index rows() const { return data.rows(); }
  Index cols() const { return data.cols(); }
};

using Chunkd = Chunk<double>;

}  // namespace streamqm
