#include "dimscope/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/SVD>

#include "dimscope/error.hpp"
#include "dimscope/neighbors.hpp"

namespace dimscope {

std::string_view to_string(Estimator e) {
  switch (e) {
    case Estimator::TwoNN: return "twonn";
    case Estimator::Mle: return "mle";
    case Estimator::Pca: return "pca";
    case Estimator::ParticipationRatio: return "pr";
  }
  return "unknown";
}

Estimator parse_estimator(std::string_view name) {
  if (name == "twonn") return Estimator::TwoNN;
  if (name == "mle") return Estimator::Mle;
  if (name == "pca") return Estimator::Pca;
  if (name == "pr") return Estimator::ParticipationRatio;
  throw Error(ErrorKind::InvalidParameter,
              "unknown estimator '" + std::string(name) + "'");
}

std::string_view to_string(MleAveraging a) {
  return a == MleAveraging::InverseOfMean ? "inverse" : "mean";
}

MleAveraging parse_mle_averaging(std::string_view name) {
  if (name == "inverse") return MleAveraging::InverseOfMean;
  if (name == "mean") return MleAveraging::MeanOfEstimates;
  throw Error(ErrorKind::InvalidParameter,
              "unknown MLE averaging '" + std::string(name) + "'");
}

DimEstimate twonn_from_ratios(std::span<const double> mu,
                              double discard_fraction) {
  if (!(discard_fraction >= 0.0 && discard_fraction < 1.0)) {
    throw Error(ErrorKind::InvalidParameter,
                "discard fraction must lie in [0, 1)");
  }
  std::vector<double> sorted(mu.begin(), mu.end());
  for (const double m : sorted) {
    if (!std::isfinite(m) || m < 1.0) {
      throw Error(ErrorKind::InvalidInput,
                  "distance ratios must be finite and >= 1");
    }
  }
  std::sort(sorted.begin(), sorted.end());
  const auto discarded = static_cast<std::size_t>(
      std::floor(discard_fraction * static_cast<double>(sorted.size())));
  const std::size_t kept = sorted.size() - discarded;
  if (kept < 2) {
    throw Error(ErrorKind::EstimationImpossible,
                "fewer than 2 ratios remain after discarding");
  }

  double log_sum = 0.0;
  for (std::size_t i = 0; i < kept; ++i) log_sum += std::log(sorted[i]);
  if (log_sum <= 0.0) {
    throw Error(ErrorKind::EstimationDegenerate,
                "all distance ratios equal 1 (degenerate lattice)");
  }

  DimEstimate est;
  est.estimator = Estimator::TwoNN;
  est.value = static_cast<double>(kept) / log_sum;
  est.n_used = kept;
  est.params["discard_fraction"] = discard_fraction;
  est.diagnostics["n_ratios"] = static_cast<double>(sorted.size());
  est.diagnostics["n_discarded"] = static_cast<double>(discarded);
  est.diagnostics["log_ratio_sum"] = log_sum;
  return est;
}

DimEstimate twonn_estimate(const RepresentationSet& set,
                           double discard_fraction) {
  const NeighborStats stats = nearest_two(set);
  DimEstimate est = twonn_from_ratios(stats.mu, discard_fraction);
  est.diagnostics["dropped_duplicates"] = static_cast<double>(stats.dropped);
  return est;
}

DimEstimate mle_estimate(const RepresentationSet& set, std::size_t k_neighbors,
                         MleAveraging averaging) {
  if (k_neighbors < 2) {
    throw Error(ErrorKind::InvalidParameter, "MLE needs k_neighbors >= 2");
  }
  if (k_neighbors >= set.n_points()) {
    throw Error(ErrorKind::InvalidParameter,
                "k_neighbors (" + std::to_string(k_neighbors) +
                    ") must be smaller than the number of points (" +
                    std::to_string(set.n_points()) + ")");
  }
  const NeighborTable table = nearest_neighbors(set, k_neighbors);
  if (table.retained.empty()) {
    throw Error(ErrorKind::EstimationImpossible,
                "no points remain after excluding duplicates");
  }

  const double inv_km1 = 1.0 / static_cast<double>(k_neighbors - 1);
  double inverse_sum = 0.0;
  double estimate_sum = 0.0;
  std::size_t finite_points = 0;
  for (std::size_t r = 0; r < table.retained.size(); ++r) {
    const auto t = table.distances_of(r);
    const double log_tk = std::log(t[k_neighbors - 1]);
    double s = 0.0;
    for (std::size_t j = 0; j + 1 < k_neighbors; ++j) {
      s += log_tk - std::log(t[j]);
    }
    const double inverse = s * inv_km1;
    inverse_sum += inverse;
    if (inverse > 0.0) {
      estimate_sum += 1.0 / inverse;
      ++finite_points;
    }
  }

  const std::size_t m = table.retained.size();
  DimEstimate est;
  est.estimator = Estimator::Mle;
  est.n_used = m;
  if (averaging == MleAveraging::InverseOfMean) {
    if (inverse_sum <= 0.0) {
      throw Error(ErrorKind::EstimationDegenerate,
                  "all neighbor distances coincide");
    }
    est.value = static_cast<double>(m) / inverse_sum;
  } else {
    if (finite_points == 0) {
      throw Error(ErrorKind::EstimationDegenerate,
                  "all neighbor distances coincide");
    }
    est.value = estimate_sum / static_cast<double>(finite_points);
    est.n_used = finite_points;
  }
  est.params["k_neighbors"] = static_cast<double>(k_neighbors);
  est.params["inverse_averaging"] =
      averaging == MleAveraging::InverseOfMean ? 1.0 : 0.0;
  est.diagnostics["dropped_duplicates"] = static_cast<double>(table.dropped);
  est.diagnostics["n_infinite"] = static_cast<double>(m - finite_points);
  return est;
}

std::vector<double> covariance_spectrum(const RepresentationSet& set) {
  const std::size_t n = set.n_points();
  if (n < 2) {
    throw Error(ErrorKind::InvalidInput, "need at least 2 points");
  }
  const Eigen::MatrixXd points = set.points();
  const Eigen::RowVectorXd mean = points.colwise().mean();
  const Eigen::MatrixXd centered = points.rowwise() - mean;

  Eigen::BDCSVD<Eigen::MatrixXd> svd(centered);
  const Eigen::VectorXd& s = svd.singularValues();

  // Treat the cloud as a single point when the spread is at rounding level.
  const double scale = points.cwiseAbs().maxCoeff();
  const double floor = 1e-12 * scale *
                       std::sqrt(static_cast<double>(n * set.ambient_dim()));
  if (s.size() == 0 || s(0) <= floor) {
    throw Error(ErrorKind::EstimationDegenerate,
                "point cloud has zero total variance");
  }

  std::vector<double> spectrum(static_cast<std::size_t>(s.size()));
  const double denom = static_cast<double>(n - 1);
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    spectrum[static_cast<std::size_t>(i)] = s(i) * s(i) / denom;
  }
  return spectrum;
}

std::size_t effective_dim_from_spectrum(std::span<const double> spectrum,
                                        double variance_cutoff) {
  if (!(variance_cutoff > 0.0 && variance_cutoff <= 1.0)) {
    throw Error(ErrorKind::InvalidParameter,
                "variance cutoff must lie in (0, 1]");
  }
  double total = 0.0;
  for (const double l : spectrum) total += l;
  if (!(total > 0.0)) {
    throw Error(ErrorKind::EstimationDegenerate, "zero total variance");
  }
  double cumulative = 0.0;
  for (std::size_t d = 0; d < spectrum.size(); ++d) {
    cumulative += spectrum[d];
    if (cumulative / total >= variance_cutoff) return d + 1;
  }
  return spectrum.size();
}

DimEstimate pca_effective_dim(const RepresentationSet& set,
                              double variance_cutoff) {
  const std::vector<double> spectrum = covariance_spectrum(set);
  const std::size_t d = effective_dim_from_spectrum(spectrum, variance_cutoff);

  DimEstimate est;
  est.estimator = Estimator::Pca;
  est.value = static_cast<double>(d);
  est.n_used = set.n_points();
  est.params["variance_cutoff"] = variance_cutoff;

  double total = 0.0;
  for (const double l : spectrum) total += l;
  est.explained_variance.reserve(spectrum.size());
  double cumulative = 0.0;
  for (const double l : spectrum) {
    cumulative += l;
    est.explained_variance.push_back(cumulative / total);
  }
  est.diagnostics["spectrum_length"] = static_cast<double>(spectrum.size());
  est.diagnostics["total_variance"] = total;
  est.diagnostics["explained_at_d"] = est.explained_variance[d - 1];
  return est;
}

double participation_ratio_from_spectrum(std::span<const double> spectrum) {
  double sum = 0.0;
  double sum_sq = 0.0;
  for (const double l : spectrum) {
    sum += l;
    sum_sq += l * l;
  }
  if (!(sum_sq > 0.0)) {
    throw Error(ErrorKind::EstimationDegenerate, "zero total variance");
  }
  return sum * sum / sum_sq;
}

DimEstimate participation_ratio(const RepresentationSet& set) {
  const std::vector<double> spectrum = covariance_spectrum(set);
  DimEstimate est;
  est.estimator = Estimator::ParticipationRatio;
  est.value = participation_ratio_from_spectrum(spectrum);
  est.n_used = set.n_points();
  est.diagnostics["spectrum_length"] = static_cast<double>(spectrum.size());
  return est;
}

}  // namespace dimscope
