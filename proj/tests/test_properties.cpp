#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>

#include "dimscope/dataset.hpp"
#include "dimscope/estimators.hpp"
#include "dimscope/manifolds.hpp"
#include "dimscope/neighbors.hpp"
#include "dimscope/stats.hpp"
#include "support.hpp"

using namespace dimscope;

namespace {

struct Case {
  ManifoldKind kind;
  std::size_t m;
  std::size_t d;
  double sigma;
  std::uint64_t seed;
};

class EstimatorInvariance : public ::testing::TestWithParam<Case> {
 protected:
  static std::vector<double> all_estimates(const PointMatrix& m) {
    const RepresentationSet set(m);
    return {twonn_estimate(set).value, mle_estimate(set, 10).value,
            pca_effective_dim(set).value, participation_ratio(set).value};
  }

  PointMatrix cloud() const {
    const Case c = GetParam();
    ManifoldSpec s;
    s.kind = c.kind;
    s.intrinsic_dim = c.m;
    s.ambient_dim = c.d;
    s.n_points = 400;
    s.noise_sigma = c.sigma;
    s.seed = c.seed;
    return sample_manifold(s).points();
  }

  static void expect_close(const std::vector<double>& a, const std::vector<double>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_LE(std::abs(a[i] - b[i]), 1e-6 * std::abs(a[i])) << "estimator " << i;
    }
  }
};

}  // namespace

TEST_P(EstimatorInvariance, Rotation) {
  const PointMatrix m = cloud();
  Rng rng(GetParam().seed + 100);
  const Eigen::MatrixXd q = random_orthogonal(static_cast<std::size_t>(m.cols()), rng);
  expect_close(all_estimates(m), all_estimates(m * q));
}

TEST_P(EstimatorInvariance, Translation) {
  const PointMatrix m = cloud();
  Rng rng(GetParam().seed + 200);
  Eigen::RowVectorXd shift(m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j) shift(j) = 10.0 * rng.normal();
  const PointMatrix moved = m.rowwise() + shift;
  expect_close(all_estimates(m), all_estimates(moved));
}

TEST_P(EstimatorInvariance, UniformScaling) {
  const PointMatrix m = cloud();
  for (const double s : {1e-3, 0.37, 250.0}) {
    expect_close(all_estimates(m), all_estimates(m * s));
  }
}

TEST_P(EstimatorInvariance, RowPermutation) {
  const PointMatrix m = cloud();
  std::vector<int> perm(static_cast<std::size_t>(m.rows()));
  std::iota(perm.begin(), perm.end(), 0);
  std::reverse(perm.begin(), perm.end());
  PointMatrix permuted(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) permuted.row(i) = m.row(perm[i]);
  expect_close(all_estimates(m), all_estimates(permuted));
}

INSTANTIATE_TEST_SUITE_P(
    Clouds, EstimatorInvariance,
    ::testing::Values(Case{ManifoldKind::Hypercube, 3, 12, 0.0, 1},
                      Case{ManifoldKind::WarpedHypercube, 5, 20, 0.0, 2},
                      Case{ManifoldKind::Gaussian, 4, 10, 0.01, 3},
                      Case{ManifoldKind::Curve, 1, 6, 0.0, 4}));

TEST(NeighborProperties, BruteForceEquivalenceOverRandomClouds) {
  Rng rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 3 + rng.below(198);
    const std::size_t d = 1 + rng.below(30);
    PointMatrix m = dimscope::testing::gaussian_matrix(n, d, 1000 + trial);
    if (trial % 3 == 0) {
      // Coarse grid values create exact duplicates and distance ties.
      m = (m * 2.0).array().round() / 2.0;
    }
    const RepresentationSet set(m);
    if (find_duplicates(m).distinct_positions < 3) continue;
    const std::size_t k = std::min<std::size_t>(1 + rng.below(8),
                                                find_duplicates(m).distinct_positions - 1);
    const NeighborTable t = nearest_neighbors(set, k);
    for (std::size_t r = 0; r < t.retained.size(); ++r) {
      const auto oracle = dimscope::testing::brute_knn(m, t.retained[r], k);
      for (std::size_t j = 0; j < k; ++j) {
        ASSERT_EQ(t.indices_of(r)[j], oracle[j].second) << "trial " << trial;
        ASSERT_EQ(t.distances_of(r)[j], oracle[j].first) << "trial " << trial;
      }
    }
  }
}

TEST(StatsProperties, SpearmanInvariantUnderMonotoneMaps) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 3 + rng.below(30);
    std::vector<double> x(n), y(n), fx(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = rng.normal();
      y[i] = x[i] + rng.normal();
      fx[i] = std::exp(3.0 * x[i]) + 7.0;
    }
    const double a = spearman(x, y).rho;
    EXPECT_NEAR(a, spearman(fx, y).rho, 1e-12);
    EXPECT_NEAR(a, spearman(y, x).rho, 1e-12);
    std::vector<double> neg(n);
    std::transform(x.begin(), x.end(), neg.begin(), [](double v) { return -v; });
    EXPECT_NEAR(-a, spearman(neg, y).rho, 1e-12);
    EXPECT_LE(std::abs(a), 1.0);
  }
}

TEST(DatasetProperties, ShufflePreservesEveryHistogram) {
  const GrammarSpec g = dimscope::testing::grammar("len15");
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    for (std::size_t k = 1; k <= 4; ++k) {
      DatasetConfig c;
      c.grammar = g.name();
      c.k = k;
      c.n_sequences = 200;
      c.seed = seed;
      const Dataset d = sample_dataset(g, c);
      const Dataset s = shuffle_dataset(d, seed);
      EXPECT_EQ(unigram_histogram(d), unigram_histogram(s));
      for (const auto& trace : d.index_trace) {
        std::size_t start = 0;
        for (const std::size_t size : d.groups) {
          for (std::size_t j = 1; j < size; ++j) {
            EXPECT_EQ(trace[start + j], trace[start]);
          }
          start += size;
        }
      }
    }
  }
}
