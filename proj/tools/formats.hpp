#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dimscope/analysis.hpp"
#include "dimscope/complexity.hpp"
#include "dimscope/dataset.hpp"
#include "dimscope/estimators.hpp"
#include "dimscope/manifolds.hpp"

namespace dimscope::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// Throws InvalidParameter for any version other than kFormatVersion.
void check_format_version(int version);

/// Throws Format unless `doc` carries the current format_version and `kind`.
void expect_document(const Json& doc, std::string_view kind,
                     const std::string& origin);

Json parse_json_file(const std::filesystem::path& path);
std::string dump(const Json& doc);

struct InputRef {
  std::string file;
  std::string sha256;
};

Json to_json(const InputRef& ref);
InputRef input_ref(const std::filesystem::path& path);

Json to_json(const DimEstimate& est);
DimEstimate dim_estimate_from_json(const Json& j);

Json to_json(const DatasetConfig& config);
DatasetConfig dataset_config_from_json(const Json& j);

Json to_json(const ManifoldSpec& spec);
ManifoldSpec manifold_spec_from_json(const Json& j);

/// kind = "kc_report"
struct KCDocument {
  InputRef input;
  DatasetConfig dataset;
  KCReport report;
};

Json to_json(const KCDocument& doc);
KCDocument kc_document_from_json(const Json& j, const std::string& origin);

/// Provenance carried from a manifest (or flags) into each estimate.
struct EstimateProvenance {
  std::string model = "unknown";
  std::optional<std::string> revision;
  std::size_t hidden_dim = 0;
  std::optional<int> layer;
  std::string dataset_hash;
  std::optional<std::string> manifest_sha256;
};

/// kind = "dim_estimate"
struct EstimateDocument {
  InputRef input;
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  EstimateProvenance provenance;
  DimEstimate estimate;
};

Json to_json(const EstimateDocument& doc);
EstimateDocument estimate_document_from_json(const Json& j,
                                             const std::string& origin);

/// kind = "representation_manifest". Written by the activation extractor and
/// by `dimscope synth`; lists one RSF file per layer.
struct ManifestLayer {
  int layer = 0;
  std::string file;
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
};

struct Manifest {
  std::string model_id;
  std::optional<std::string> revision;
  std::size_t hidden_size = 0;
  std::string tokenizer_hash;
  std::string dataset_hash;
  std::string dataset_path;
  std::vector<ManifestLayer> layers;
  std::vector<std::size_t> skipped;
  std::optional<ManifoldSpec> synth;
};

Json to_json(const Manifest& m);
Manifest manifest_from_json(const Json& j, const std::string& origin);

}  // namespace dimscope::cli
