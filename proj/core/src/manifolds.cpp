#include "dimscope/manifolds.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dimscope/error.hpp"

namespace dimscope {

std::string_view to_string(ManifoldKind kind) {
  switch (kind) {
    case ManifoldKind::Hypercube: return "hypercube";
    case ManifoldKind::Curve: return "curve";
    case ManifoldKind::WarpedHypercube: return "warped_hypercube";
    case ManifoldKind::Gaussian: return "gaussian";
    case ManifoldKind::LinearSubspace: return "linear_subspace";
  }
  return "unknown";
}

ManifoldKind parse_manifold_kind(std::string_view name) {
  for (const ManifoldKind k :
       {ManifoldKind::Hypercube, ManifoldKind::Curve,
        ManifoldKind::WarpedHypercube, ManifoldKind::Gaussian,
        ManifoldKind::LinearSubspace}) {
    if (name == to_string(k)) return k;
  }
  throw Error(ErrorKind::InvalidParameter,
              "unknown manifold kind '" + std::string(name) + "'");
}

void validate(const ManifoldSpec& spec) {
  if (spec.n_points < 3) {
    throw Error(ErrorKind::InvalidParameter, "n_points must be >= 3");
  }
  if (spec.intrinsic_dim == 0 || spec.intrinsic_dim > spec.ambient_dim) {
    throw Error(ErrorKind::InvalidParameter,
                "intrinsic_dim must lie in [1, ambient_dim]");
  }
  if (!(spec.noise_sigma >= 0.0) || !std::isfinite(spec.noise_sigma)) {
    throw Error(ErrorKind::InvalidParameter, "noise_sigma must be >= 0");
  }
  if (spec.kind == ManifoldKind::Curve &&
      (spec.intrinsic_dim != 1 || spec.ambient_dim < 3)) {
    throw Error(ErrorKind::InvalidParameter,
                "curve needs intrinsic_dim = 1 and ambient_dim >= 3");
  }
}

Eigen::MatrixXd random_orthogonal(std::size_t dim, Rng& rng) {
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = rng.normal();
  }
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < n; ++j) {
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  return q;
}

RepresentationSet sample_manifold(const ManifoldSpec& spec) {
  validate(spec);
  const auto n = static_cast<Eigen::Index>(spec.n_points);
  const auto m = static_cast<Eigen::Index>(spec.intrinsic_dim);
  const auto dim = static_cast<Eigen::Index>(spec.ambient_dim);

  Rng rotation_rng(derive_seed(spec.seed, {1}));
  Rng point_rng(derive_seed(spec.seed, {2}));
  Rng noise_rng(derive_seed(spec.seed, {3}));

  const Eigen::MatrixXd q = random_orthogonal(spec.ambient_dim, rotation_rng);

  // Intrinsic coordinates, at most min(D, 3) columns for the curve.
  const Eigen::Index width = spec.kind == ManifoldKind::Curve ? 3 : m;
  Eigen::MatrixXd local(n, width);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (Eigen::Index i = 0; i < n; ++i) {
    switch (spec.kind) {
      case ManifoldKind::Hypercube:
        for (Eigen::Index j = 0; j < m; ++j) local(i, j) = point_rng.uniform();
        break;
      case ManifoldKind::WarpedHypercube:
        for (Eigen::Index j = 0; j < m; ++j) {
          const double x = point_rng.uniform();
          local(i, j) = x + 0.3 * std::sin(two_pi * x);
        }
        break;
      case ManifoldKind::Curve: {
        const double t = two_pi * point_rng.uniform();
        local(i, 0) = t;
        local(i, 1) = std::sin(t);
        local(i, 2) = std::cos(t);
        break;
      }
      case ManifoldKind::Gaussian:
      case ManifoldKind::LinearSubspace:
        for (Eigen::Index j = 0; j < m; ++j) local(i, j) = point_rng.normal();
        break;
    }
  }

  // Zero padding means only the leading columns of Q contribute.
  PointMatrix points = local * q.leftCols(width).transpose();
  if (spec.noise_sigma > 0.0) {
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < dim; ++j) {
        points(i, j) += spec.noise_sigma * noise_rng.normal();
      }
    }
  }

  Provenance meta;
  meta.source = "synth:" + std::string(to_string(spec.kind));
  return RepresentationSet(std::move(points), std::move(meta));
}

}  // namespace dimscope
