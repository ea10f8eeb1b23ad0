#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include <Eigen/Dense>

namespace dimscope {

/// Row-major so that each point is a contiguous block of `ambient_dim` values.
using PointMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct Provenance {
  std::string source;
  std::optional<int> layer;
  std::string dataset_hash;
};

/// An N x D point cloud, one row per sequence. Entries are checked finite on
/// construction.
class RepresentationSet {
 public:
  explicit RepresentationSet(PointMatrix points, Provenance meta = {});

  const PointMatrix& points() const noexcept { return points_; }
  std::size_t n_points() const noexcept {
    return static_cast<std::size_t>(points_.rows());
  }
  std::size_t ambient_dim() const noexcept {
    return static_cast<std::size_t>(points_.cols());
  }
  const Provenance& meta() const noexcept { return meta_; }

 private:
  PointMatrix points_;
  Provenance meta_;
};

}  // namespace dimscope
