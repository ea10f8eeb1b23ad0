#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dimscope/representation.hpp"

namespace dimscope {

/// Exact Euclidean distance with a fixed left-to-right summation order. Every
/// reported neighbor distance is produced by this function.
double euclidean_distance(std::span<const double> a, std::span<const double> b);

/// Groups of bitwise-identical rows. `duplicated[i]` is true when row i shares
/// its position with another row; `representative[i]` is the smallest row
/// index at the same position.
struct DuplicateMap {
  std::vector<bool> duplicated;
  std::vector<std::size_t> representative;
  std::size_t duplicated_count = 0;
  std::size_t distinct_positions = 0;
};

DuplicateMap find_duplicates(const PointMatrix& points);

/// k nearest distinct positions for every non-duplicated point.
///
/// Rows sharing a position with another row are excluded as queries (their
/// first-neighbor distance would be zero) and are collapsed to one candidate
/// position when they appear as neighbors. Distances are sorted ascending;
/// equal distances are ordered by row index.
struct NeighborTable {
  std::size_t k = 0;
  std::vector<std::size_t> retained;
  /// retained.size() x k, row-major.
  std::vector<double> distances;
  std::vector<std::size_t> indices;
  std::size_t dropped = 0;

  std::span<const double> distances_of(std::size_t r) const {
    return {distances.data() + r * k, k};
  }
  std::span<const std::size_t> indices_of(std::size_t r) const {
    return {indices.data() + r * k, k};
  }
};

NeighborTable nearest_neighbors(const RepresentationSet& set, std::size_t k);

struct NeighborStats {
  std::vector<std::size_t> index;
  std::vector<double> r1;
  std::vector<double> r2;
  std::vector<double> mu;
  std::size_t dropped = 0;
};

/// First and second nearest-neighbor distances and their ratio mu = r2 / r1.
/// Throws EstimationImpossible when fewer than 3 points survive duplicate
/// exclusion.
NeighborStats nearest_two(const RepresentationSet& set);

}  // namespace dimscope
