#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "dimscope/error.hpp"

namespace {

using namespace dimscope;
using namespace dimscope::cli;

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--seed", common.seed, "Base random seed");
  cmd->add_option("--out", common.out, "Output directory");
  cmd->add_option("--format-version", common.format_version,
                  "On-disk format version");
}

void report(const std::vector<fs::path>& written) {
  for (const fs::path& p : written) std::cout << p.string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dimscope: intrinsic dimension and compression complexity toolkit"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Sample grammar datasets as JSONL");
  add_common(generate, gen.common);
  generate->add_option("--grammar", gen.grammars, "Grammar name or JSON file")
      ->required();
  generate->add_option("--grammar-dir", gen.grammar_dir, "Grammar search directory");
  generate->add_option("--k", gen.ks, "Coupling levels");
  generate->add_option("--mode", gen.modes, "coherent and/or shuffled");
  generate->add_option("--splits", gen.splits, "Number of data splits");
  generate->add_option("--n", gen.n_sequences, "Sequences per dataset");

  KcOptions kc;
  auto* kc_cmd = app.add_subcommand("kc", "Gzip complexity of dataset JSONL files");
  add_common(kc_cmd, kc.common);
  kc_cmd->add_option("datasets", kc.datasets, "Dataset JSONL files")->required();
  kc_cmd->add_option("--level", kc.level, "gzip level 1-9");

  EstimateOptions est;
  auto* estimate = app.add_subcommand("estimate", "Dimension estimates of RSF matrices");
  add_common(estimate, est.common);
  estimate->add_option("--manifest", est.manifests, "Representation manifest JSON");
  estimate->add_option("matrices", est.matrices, "Bare RSF files");
  estimate->add_option("--estimator", est.estimators, "twonn, mle, pca, pr");
  estimate->add_option("--discard", est.discard_fraction,
                       "TwoNN fraction of largest ratios to discard");
  estimate->add_option("--mle-k", est.mle_k, "MLE neighbor count");
  estimate->add_option("--mle-averaging", est.mle_averaging, "inverse or mean");
  estimate->add_option("--cutoff", est.variance_cutoff, "PCA explained variance cutoff");
  estimate->add_option("--model", est.model, "Model label for bare RSF files");
  estimate->add_option("--dataset", est.dataset, "Dataset JSONL for bare RSF files");

  CorrelateOptions cor;
  auto* correlate = app.add_subcommand("correlate", "Correlate complexity with dimension");
  add_common(correlate, cor.common);
  correlate->add_option("inputs", cor.inputs, "KC and estimate JSON files or directories")
      ->required();
  correlate->add_option("--granularity", cor.granularities, "mean_layers, per_layer");
  correlate->add_flag("--exact-p", cor.exact_p, "Exact permutation p-values (n <= 10)");
  correlate->add_flag("--svg", cor.svg, "Write SVG charts");

  SynthOptions syn;
  std::string kind = "hypercube";
  auto* synth = app.add_subcommand("synth", "Write synthetic manifolds as RSF layers");
  add_common(synth, syn.common);
  synth->add_option("--kind", kind,
                    "hypercube, curve, warped_hypercube, gaussian, linear_subspace");
  synth->add_option("--intrinsic-dim", syn.spec.intrinsic_dim)->required();
  synth->add_option("--ambient-dim", syn.spec.ambient_dim)->required();
  synth->add_option("--n", syn.spec.n_points)->required();
  synth->add_option("--noise", syn.spec.noise_sigma, "Gaussian noise sigma");
  synth->add_option("--layers", syn.layers, "Number of layer files");
  synth->add_option("--model", syn.model, "Model label in the manifest");
  synth->add_option("--dataset", syn.dataset, "Dataset JSONL to bind");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*generate) report(run_generate(gen));
    if (*kc_cmd) report(run_kc(kc));
    if (*estimate) report(run_estimate(est));
    if (*correlate) report(run_correlate(cor));
    if (*synth) {
      syn.spec.kind = parse_manifold_kind(kind);
      report(run_synth(syn));
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
