#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dimscope/analysis.hpp"
#include "dimscope/estimators.hpp"
#include "dimscope/manifolds.hpp"

namespace dimscope::cli {

namespace fs = std::filesystem;

struct CommonOptions {
  std::uint64_t seed = 0;
  fs::path out = ".";
  int format_version = 1;
};

struct GenerateOptions {
  CommonOptions common;
  std::vector<std::string> grammars;
  fs::path grammar_dir;
  std::vector<std::size_t> ks = {1, 2, 3, 4};
  std::vector<std::string> modes = {"coherent", "shuffled"};
  std::size_t splits = 5;
  std::size_t n_sequences = 10000;
};

struct KcOptions {
  CommonOptions common;
  std::vector<fs::path> datasets;
  int level = 6;
};

struct EstimateOptions {
  CommonOptions common;
  std::vector<fs::path> manifests;
  std::vector<fs::path> matrices;
  std::vector<std::string> estimators = {"twonn", "mle", "pca", "pr"};
  double discard_fraction = kDefaultDiscardFraction;
  std::size_t mle_k = kDefaultMleNeighbors;
  std::string mle_averaging = "inverse";
  double variance_cutoff = kDefaultVarianceCutoff;
  /// Provenance for bare matrix files.
  std::string model = "unknown";
  std::optional<fs::path> dataset;
};

struct CorrelateOptions {
  CommonOptions common;
  std::vector<fs::path> inputs;
  std::vector<std::string> granularities = {"mean_layers", "per_layer"};
  bool exact_p = false;
  bool svg = false;
};

struct SynthOptions {
  CommonOptions common;
  ManifoldSpec spec;
  std::size_t layers = 1;
  std::string model = "synth";
  std::optional<fs::path> dataset;
};

/// Each command writes its outputs under `common.out` and returns the written
/// paths in creation order.
std::vector<fs::path> run_generate(const GenerateOptions& opts);
std::vector<fs::path> run_kc(const KcOptions& opts);
std::vector<fs::path> run_estimate(const EstimateOptions& opts);
std::vector<fs::path> run_correlate(const CorrelateOptions& opts);
std::vector<fs::path> run_synth(const SynthOptions& opts);

/// Resolves a grammar argument: an existing file path, or a bare name looked
/// up as <grammar_dir>/<name>.json.
fs::path resolve_grammar(const std::string& arg, const fs::path& grammar_dir);

fs::path default_grammar_dir();

}  // namespace dimscope::cli
