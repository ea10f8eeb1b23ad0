#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dimscope/representation.hpp"

namespace dimscope {

enum class Estimator { TwoNN, Mle, Pca, ParticipationRatio };

std::string_view to_string(Estimator e);
Estimator parse_estimator(std::string_view name);

/// How per-point Levina-Bickel estimates are pooled.
enum class MleAveraging {
  /// Mean of the per-point inverse estimates, then inverted (MacKay and
  /// Ghahramani). Consistent under the local Poisson model.
  InverseOfMean,
  /// Plain mean of per-point estimates; biased upward by (k-1)/(k-2).
  MeanOfEstimates,
};

std::string_view to_string(MleAveraging a);
MleAveraging parse_mle_averaging(std::string_view name);

struct DimEstimate {
  double value = 0.0;
  Estimator estimator = Estimator::TwoNN;
  std::map<std::string, double> params;
  std::size_t n_used = 0;
  std::map<std::string, double> diagnostics;
  /// Cumulative explained-variance ratios (pca only).
  std::vector<double> explained_variance;
};

inline constexpr double kDefaultDiscardFraction = 0.0;
inline constexpr std::size_t kDefaultMleNeighbors = 20;
inline constexpr double kDefaultVarianceCutoff = 0.99;

/// Maximum-likelihood TwoNN fit on precomputed ratios: sorts mu, drops the
/// largest `discard_fraction` share and returns M / sum(log mu).
DimEstimate twonn_from_ratios(std::span<const double> mu,
                              double discard_fraction = kDefaultDiscardFraction);

DimEstimate twonn_estimate(const RepresentationSet& set,
                           double discard_fraction = kDefaultDiscardFraction);

/// Levina-Bickel estimator over the k nearest distinct neighbors.
DimEstimate mle_estimate(const RepresentationSet& set,
                         std::size_t k_neighbors = kDefaultMleNeighbors,
                         MleAveraging averaging = MleAveraging::InverseOfMean);

/// Eigenvalues of the sample covariance of the centered data, descending,
/// computed from the singular values of the centered matrix.
std::vector<double> covariance_spectrum(const RepresentationSet& set);

DimEstimate pca_effective_dim(const RepresentationSet& set,
                              double variance_cutoff = kDefaultVarianceCutoff);

/// Smallest d whose leading-d share of `spectrum` reaches the cutoff.
std::size_t effective_dim_from_spectrum(std::span<const double> spectrum,
                                        double variance_cutoff);

DimEstimate participation_ratio(const RepresentationSet& set);

/// (sum lambda)^2 / sum lambda^2.
double participation_ratio_from_spectrum(std::span<const double> spectrum);

}  // namespace dimscope
