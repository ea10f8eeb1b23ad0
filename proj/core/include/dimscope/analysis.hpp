#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dimscope/complexity.hpp"
#include "dimscope/estimators.hpp"
#include "dimscope/stats.hpp"

namespace dimscope {

/// Dimension estimates of one model over its layers, for one dataset.
struct LayerProfile {
  std::string model_label;
  std::size_t hidden_dim = 0;
  std::vector<std::pair<int, DimEstimate>> per_layer;
  std::string dataset_key;

  std::vector<int> layers() const;
  std::vector<double> values() const;
};

/// Throws InvalidInput unless layer indices are strictly increasing.
void validate_profile(const LayerProfile& profile);

double mean_over_layers(const LayerProfile& profile);

struct WidthPoint {
  std::size_t hidden_dim = 0;
  double mean_dim = 0.0;
};

/// OLS of mean layerwise dimension on hidden width D. Needs three distinct
/// widths; all-equal widths raise DegenerateDesign.
RegressionResult fit_dimension_vs_width(std::span<const WidthPoint> points);

/// mean_over_layers(a) - mean_over_layers(b); both profiles must cover the
/// same model and layers.
double delta_dimension(const LayerProfile& a, const LayerProfile& b);

enum class Granularity { MeanLayers, PerLayer };

std::string_view to_string(Granularity g);
Granularity parse_granularity(std::string_view name);

struct LayerCorrelation {
  /// Empty for the mean-over-layers correlation.
  std::optional<int> layer;
  CorrelationResult result;
  bool significant_05 = false;
  bool significant_10 = false;
  std::string marker;
};

/// Spearman correlation between compressed size and dimension. `kc[i]` and
/// `profiles[i]` describe the same dataset configuration; at least three
/// configurations are required.
std::vector<LayerCorrelation> correlate_kc_vs_dimension(
    std::span<const KCReport> kc, std::span<const LayerProfile> profiles,
    Granularity granularity,
    PValueMethod p_method = PValueMethod::TApproximation);

}  // namespace dimscope
