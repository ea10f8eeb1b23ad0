#include "dimscope/analysis.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "dimscope/error.hpp"

namespace dimscope {

std::vector<int> LayerProfile::layers() const {
  std::vector<int> out;
  out.reserve(per_layer.size());
  for (const auto& [layer, est] : per_layer) out.push_back(layer);
  return out;
}

std::vector<double> LayerProfile::values() const {
  std::vector<double> out;
  out.reserve(per_layer.size());
  for (const auto& [layer, est] : per_layer) out.push_back(est.value);
  return out;
}

void validate_profile(const LayerProfile& profile) {
  for (std::size_t i = 1; i < profile.per_layer.size(); ++i) {
    if (profile.per_layer[i].first <= profile.per_layer[i - 1].first) {
      throw Error(ErrorKind::InvalidInput,
                  "layer indices of '" + profile.model_label +
                      "' are not strictly increasing");
    }
  }
}

double mean_over_layers(const LayerProfile& profile) {
  if (profile.per_layer.empty()) {
    throw Error(ErrorKind::InvalidInput, "profile has no layers");
  }
  validate_profile(profile);
  double sum = 0.0;
  for (const auto& [layer, est] : profile.per_layer) sum += est.value;
  return sum / static_cast<double>(profile.per_layer.size());
}

RegressionResult fit_dimension_vs_width(std::span<const WidthPoint> points) {
  std::vector<double> x;
  std::vector<double> y;
  std::set<std::size_t> widths;
  for (const WidthPoint& p : points) {
    x.push_back(static_cast<double>(p.hidden_dim));
    y.push_back(p.mean_dim);
    widths.insert(p.hidden_dim);
  }
  if (widths.size() == 1) {
    throw Error(ErrorKind::DegenerateDesign, "all hidden widths are equal");
  }
  if (widths.size() < 3) {
    throw Error(ErrorKind::InvalidInput,
                "need at least 3 distinct hidden widths, got " +
                    std::to_string(widths.size()));
  }
  return linear_regression(x, y);
}

double delta_dimension(const LayerProfile& a, const LayerProfile& b) {
  if (a.model_label != b.model_label) {
    throw Error(ErrorKind::InvalidInput, "profiles come from different models ('" +
                                             a.model_label + "' vs '" +
                                             b.model_label + "')");
  }
  if (a.layers() != b.layers()) {
    throw Error(ErrorKind::InvalidInput, "profiles cover different layers");
  }
  return mean_over_layers(a) - mean_over_layers(b);
}

std::string_view to_string(Granularity g) {
  return g == Granularity::MeanLayers ? "mean_layers" : "per_layer";
}

Granularity parse_granularity(std::string_view name) {
  if (name == "mean_layers") return Granularity::MeanLayers;
  if (name == "per_layer") return Granularity::PerLayer;
  throw Error(ErrorKind::InvalidParameter,
              "unknown granularity '" + std::string(name) + "'");
}

namespace {

LayerCorrelation make_entry(std::optional<int> layer, CorrelationResult r) {
  LayerCorrelation out;
  out.layer = layer;
  out.significant_05 = r.p_value < 0.05;
  out.significant_10 = r.p_value < 0.1;
  out.marker = significance_marker(r.p_value);
  out.result = std::move(r);
  return out;
}

}  // namespace

std::vector<LayerCorrelation> correlate_kc_vs_dimension(
    std::span<const KCReport> kc, std::span<const LayerProfile> profiles,
    Granularity granularity, PValueMethod p_method) {
  if (kc.size() != profiles.size()) {
    throw Error(ErrorKind::InvalidInput,
                "KC reports and profiles are not aligned (" +
                    std::to_string(kc.size()) + " vs " +
                    std::to_string(profiles.size()) + ")");
  }
  if (kc.size() < 3) {
    throw Error(ErrorKind::InvalidInput,
                "need at least 3 aligned dataset configurations, got " +
                    std::to_string(kc.size()));
  }
  std::vector<double> sizes;
  for (const KCReport& r : kc) sizes.push_back(r.compressed_kb);

  std::vector<LayerCorrelation> out;
  if (granularity == Granularity::MeanLayers) {
    std::vector<double> dims;
    for (const LayerProfile& p : profiles) dims.push_back(mean_over_layers(p));
    out.push_back(make_entry(std::nullopt, spearman(sizes, dims, p_method)));
    return out;
  }

  const std::vector<int> layers = profiles.front().layers();
  for (const LayerProfile& p : profiles) {
    validate_profile(p);
    if (p.layers() != layers) {
      throw Error(ErrorKind::InvalidInput,
                  "per-layer correlation needs identical layer sets");
    }
  }
  for (std::size_t li = 0; li < layers.size(); ++li) {
    std::vector<double> dims;
    for (const LayerProfile& p : profiles) dims.push_back(p.per_layer[li].second.value);
    out.push_back(make_entry(layers[li], spearman(sizes, dims, p_method)));
  }
  return out;
}

}  // namespace dimscope
