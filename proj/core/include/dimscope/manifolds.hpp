#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include <Eigen/Dense>

#include "dimscope/representation.hpp"
#include "dimscope/rng.hpp"

namespace dimscope {

enum class ManifoldKind {
  Hypercube,
  Curve,
  WarpedHypercube,
  Gaussian,
  LinearSubspace,
};

std::string_view to_string(ManifoldKind kind);
ManifoldKind parse_manifold_kind(std::string_view name);

/// Point cloud of known intrinsic dimension embedded in `ambient_dim`
/// coordinates by a random rotation.
struct ManifoldSpec {
  ManifoldKind kind = ManifoldKind::Hypercube;
  std::size_t intrinsic_dim = 1;
  std::size_t ambient_dim = 1;
  std::size_t n_points = 0;
  double noise_sigma = 0.0;
  std::uint64_t seed = 0;
};

void validate(const ManifoldSpec& spec);

/// Q from the QR factorization of a square standard-normal matrix, with column
/// signs fixed so that R has a positive diagonal (Haar distributed).
Eigen::MatrixXd random_orthogonal(std::size_t dim, Rng& rng);

/// hypercube: uniform [0,1]^m. curve: (t, sin t, cos t), t ~ U[0, 2 pi).
/// warped_hypercube: x + 0.3 sin(2 pi x) per coordinate. gaussian: isotropic
/// N(0, I_m). linear_subspace: N(0, I_m) coefficients, exact rank m.
/// Coordinates are zero-padded to D, rotated, then noise_sigma isotropic
/// Gaussian noise is added.
RepresentationSet sample_manifold(const ManifoldSpec& spec);

}  // namespace dimscope
