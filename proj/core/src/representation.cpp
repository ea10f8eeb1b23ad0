#include "dimscope/representation.hpp"

#include <string>

#include "dimscope/error.hpp"

namespace dimscope {

RepresentationSet::RepresentationSet(PointMatrix points, Provenance meta)
    : points_(std::move(points)), meta_(std::move(meta)) {
  if (points_.rows() == 0 || points_.cols() == 0) {
    throw Error(ErrorKind::InvalidInput, "point cloud is empty");
  }
  if (!points_.allFinite()) {
    for (Eigen::Index i = 0; i < points_.rows(); ++i) {
      if (!points_.row(i).allFinite()) {
        throw Error(ErrorKind::InvalidInput,
                    "non-finite value in row " + std::to_string(i));
      }
    }
  }
}

}  // namespace dimscope
