#include "dimscope/neighbors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "dimscope/error.hpp"
#include "dimscope/parallel.hpp"

namespace dimscope {
namespace {

constexpr std::size_t kQueryBlock = 16;
constexpr std::size_t kCandidateBlock = 256;

// Squared distance with four independent accumulators so the loop pipelines.
// Only used to rank candidates; reported distances come from
// euclidean_distance().
inline double squared_distance_fast(const double* a, const double* b,
                                    std::size_t dim) {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t d = 0;
  for (; d + 4 <= dim; d += 4) {
    const double e0 = a[d] - b[d];
    const double e1 = a[d + 1] - b[d + 1];
    const double e2 = a[d + 2] - b[d + 2];
    const double e3 = a[d + 3] - b[d + 3];
    s0 += e0 * e0;
    s1 += e1 * e1;
    s2 += e2 * e2;
    s3 += e3 * e3;
  }
  for (; d < dim; ++d) {
    const double e = a[d] - b[d];
    s0 += e * e;
  }
  return (s0 + s1) + (s2 + s3);
}

// Sorted bounded buffer of the k best (distance, index) pairs. Candidates
// arrive in ascending index order, so strict comparison keeps the lower index
// among equal distances.
struct TopK {
  std::size_t k;
  double* dist;
  std::size_t* idx;

  void reset() {
    std::fill(dist, dist + k, std::numeric_limits<double>::infinity());
    std::fill(idx, idx + k, std::numeric_limits<std::size_t>::max());
  }

  void offer(double d, std::size_t i) {
    if (!(d < dist[k - 1])) return;
    std::size_t pos = k - 1;
    while (pos > 0 && d < dist[pos - 1]) {
      dist[pos] = dist[pos - 1];
      idx[pos] = idx[pos - 1];
      --pos;
    }
    dist[pos] = d;
    idx[pos] = i;
  }
};

}  // namespace

double euclidean_distance(std::span<const double> a,
                          std::span<const double> b) {
  double s = 0.0;
  for (std::size_t d = 0; d < a.size(); ++d) {
    const double e = a[d] - b[d];
    s += e * e;
  }
  return std::sqrt(s);
}

DuplicateMap find_duplicates(const PointMatrix& points) {
  const auto n = static_cast<std::size_t>(points.rows());
  const auto dim = static_cast<std::size_t>(points.cols());
  const double* data = points.data();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto row = [&](std::size_t i) { return data + i * dim; };
  auto less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(row(a), row(a) + dim, row(b),
                                        row(b) + dim);
  };
  auto equal = [&](std::size_t a, std::size_t b) {
    return std::equal(row(a), row(a) + dim, row(b));
  };
  std::stable_sort(order.begin(), order.end(), less);

  DuplicateMap map;
  map.duplicated.assign(n, false);
  map.representative.resize(n);
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && equal(order[start], order[end])) ++end;
    // stable_sort keeps equal rows in index order; the first is the smallest.
    const std::size_t rep = order[start];
    for (std::size_t j = start; j < end; ++j) {
      map.representative[order[j]] = rep;
      if (end - start > 1) map.duplicated[order[j]] = true;
    }
    if (end - start > 1) map.duplicated_count += end - start;
    ++map.distinct_positions;
    start = end;
  }
  return map;
}

NeighborTable nearest_neighbors(const RepresentationSet& set, std::size_t k) {
  if (k == 0) {
    throw Error(ErrorKind::InvalidParameter, "neighbor count must be >= 1");
  }
  const PointMatrix& points = set.points();
  const std::size_t n = set.n_points();
  const std::size_t dim = set.ambient_dim();
  const double* data = points.data();

  const DuplicateMap dups = find_duplicates(points);
  if (dups.distinct_positions < k + 1) {
    throw Error(ErrorKind::EstimationImpossible,
                "need at least " + std::to_string(k + 1) +
                    " distinct points, found " +
                    std::to_string(dups.distinct_positions));
  }

  std::vector<std::size_t> candidates;
  candidates.reserve(dups.distinct_positions);
  NeighborTable table;
  table.k = k;
  table.dropped = dups.duplicated_count;
  for (std::size_t i = 0; i < n; ++i) {
    if (dups.representative[i] == i) candidates.push_back(i);
    if (!dups.duplicated[i]) table.retained.push_back(i);
  }

  std::vector<double> packed(candidates.size() * dim);
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    std::copy_n(data + candidates[c] * dim, dim, packed.data() + c * dim);
  }

  const std::size_t queries = table.retained.size();
  table.distances.resize(queries * k);
  table.indices.resize(queries * k);

  parallel_for(queries, [&](std::size_t begin, std::size_t end) {
    for (std::size_t qb = begin; qb < end; qb += kQueryBlock) {
      const std::size_t qe = std::min(end, qb + kQueryBlock);
      std::vector<TopK> best;
      best.reserve(qe - qb);
      for (std::size_t q = qb; q < qe; ++q) {
        TopK t{k, table.distances.data() + q * k, table.indices.data() + q * k};
        t.reset();
        best.push_back(t);
      }
      for (std::size_t cb = 0; cb < candidates.size(); cb += kCandidateBlock) {
        const std::size_t ce = std::min(candidates.size(), cb + kCandidateBlock);
        for (std::size_t q = qb; q < qe; ++q) {
          const std::size_t self = table.retained[q];
          const double* query = data + self * dim;
          TopK& t = best[q - qb];
          for (std::size_t c = cb; c < ce; ++c) {
            if (candidates[c] == self) continue;
            t.offer(squared_distance_fast(query, packed.data() + c * dim, dim),
                    candidates[c]);
          }
        }
      }
      // Re-measure the selected neighbors with the canonical distance.
      for (std::size_t q = qb; q < qe; ++q) {
        const std::size_t self = table.retained[q];
        TopK& t = best[q - qb];
        std::vector<std::pair<double, std::size_t>> exact(k);
        for (std::size_t j = 0; j < k; ++j) {
          exact[j] = {euclidean_distance({data + self * dim, dim},
                                         {data + t.idx[j] * dim, dim}),
                      t.idx[j]};
        }
        std::sort(exact.begin(), exact.end());
        for (std::size_t j = 0; j < k; ++j) {
          t.dist[j] = exact[j].first;
          t.idx[j] = exact[j].second;
        }
      }
    }
  });
  return table;
}

NeighborStats nearest_two(const RepresentationSet& set) {
  if (set.n_points() < 3) {
    throw Error(ErrorKind::EstimationImpossible,
                "need at least 3 points, got " + std::to_string(set.n_points()));
  }
  const NeighborTable table = nearest_neighbors(set, 2);
  if (table.retained.size() < 3) {
    throw Error(ErrorKind::EstimationImpossible,
                "fewer than 3 points remain after excluding " +
                    std::to_string(table.dropped) + " duplicates");
  }
  NeighborStats stats;
  stats.dropped = table.dropped;
  stats.index = table.retained;
  const std::size_t m = table.retained.size();
  stats.r1.resize(m);
  stats.r2.resize(m);
  stats.mu.resize(m);
  for (std::size_t r = 0; r < m; ++r) {
    const auto d = table.distances_of(r);
    stats.r1[r] = d[0];
    stats.r2[r] = d[1];
    stats.mu[r] = d[1] / d[0];
  }
  return stats;
}

}  // namespace dimscope
