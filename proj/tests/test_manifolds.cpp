#include <gtest/gtest.h>

#include "dimscope/error.hpp"
#include "dimscope/estimators.hpp"
#include "dimscope/manifolds.hpp"
#include "support.hpp"

using namespace dimscope;

namespace {

ManifoldSpec spec(ManifoldKind kind, std::size_t m, std::size_t d, std::size_t n,
                  std::uint64_t seed = 1) {
  ManifoldSpec s;
  s.kind = kind;
  s.intrinsic_dim = m;
  s.ambient_dim = d;
  s.n_points = n;
  s.seed = seed;
  return s;
}

}  // namespace

TEST(Manifolds, RandomRotationIsOrthogonal) {
  Rng rng(12);
  for (const std::size_t d : {1u, 7u, 100u}) {
    const Eigen::MatrixXd q = random_orthogonal(d, rng);
    const double err = (q.transpose() * q - Eigen::MatrixXd::Identity(d, d))
                           .cwiseAbs()
                           .maxCoeff();
    EXPECT_LT(err, 1e-10) << d;
  }
}

TEST(Manifolds, ShapeAndDeterminism) {
  for (const ManifoldKind kind :
       {ManifoldKind::Hypercube, ManifoldKind::WarpedHypercube, ManifoldKind::Gaussian,
        ManifoldKind::LinearSubspace}) {
    const ManifoldSpec s = spec(kind, 3, 9, 50, 4);
    const RepresentationSet a = sample_manifold(s);
    EXPECT_EQ(a.n_points(), 50u);
    EXPECT_EQ(a.ambient_dim(), 9u);
    EXPECT_EQ(a.points(), sample_manifold(s).points());
    EXPECT_EQ(parse_manifold_kind(to_string(kind)), kind);
  }
}

TEST(Manifolds, RotationPreservesPairwiseDistances) {
  // The hypercube samples live in [0,1]^m before rotation, so every pairwise
  // distance is at most sqrt(m).
  const RepresentationSet s = sample_manifold(spec(ManifoldKind::Hypercube, 4, 40, 200));
  double max_d = 0.0;
  for (int i = 0; i < 200; ++i) {
    for (int j = 0; j < i; ++j) {
      max_d = std::max(max_d, (s.points().row(i) - s.points().row(j)).norm());
    }
  }
  EXPECT_LE(max_d, 2.0 + 1e-12);
  EXPECT_GT(max_d, 1.0);
}

TEST(Manifolds, NoiseRaisesRank) {
  ManifoldSpec s = spec(ManifoldKind::LinearSubspace, 3, 16, 400);
  EXPECT_EQ(pca_effective_dim(sample_manifold(s)).value, 3.0);
  s.noise_sigma = 1.0;
  EXPECT_GT(pca_effective_dim(sample_manifold(s)).value, 3.0);
}

TEST(Manifolds, LinearSubspaceRankThreeIn64D) {
  const RepresentationSet s =
      sample_manifold(spec(ManifoldKind::LinearSubspace, 3, 64, 1000));
  EXPECT_EQ(pca_effective_dim(s).value, 3.0);
}

TEST(Manifolds, CurveMleNearOne) {
  const RepresentationSet s = sample_manifold(spec(ManifoldKind::Curve, 1, 20, 10000));
  const double v = mle_estimate(s, 5).value;
  EXPECT_GE(v, 0.95);
  EXPECT_LE(v, 1.05);
}

TEST(Manifolds, InvalidSpecs) {
  for (const ManifoldSpec& s :
       {spec(ManifoldKind::Hypercube, 5, 4, 100), spec(ManifoldKind::Hypercube, 0, 4, 100),
        spec(ManifoldKind::Hypercube, 2, 4, 2), spec(ManifoldKind::Curve, 2, 20, 100),
        spec(ManifoldKind::Curve, 1, 2, 100)}) {
    try {
      sample_manifold(s);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidParameter);
    }
  }
}
