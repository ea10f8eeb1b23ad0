#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "dimscope/complexity.hpp"
#include "dimscope/dataset.hpp"
#include "dimscope/error.hpp"
#include "dimscope/fileio.hpp"
#include "dimscope/grammar.hpp"
#include "dimscope/hash.hpp"
#include "dimscope/rng.hpp"
#include "dimscope/rsf.hpp"
#include "dimscope/svg.hpp"
#include "formats.hpp"

#ifndef DIMSCOPE_DEFAULT_GRAMMAR_DIR
#define DIMSCOPE_DEFAULT_GRAMMAR_DIR "data/grammars"
#endif

namespace dimscope::cli {
namespace {

void prepare_out_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw Error(ErrorKind::Io,
                "output directory '" + dir.string() + "' is not writable");
  }
}

void check_common(const CommonOptions& c) {
  check_format_version(c.format_version);
  prepare_out_dir(c.out);
}

std::string fmt_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string sanitize(const std::string& s) {
  std::string out;
  for (const char c : s) {
    const bool keep = std::isalnum(static_cast<unsigned char>(c)) || c == '-' ||
                      c == '_' || c == '.';
    out.push_back(keep ? c : '_');
  }
  return out.empty() ? "unnamed" : out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_json(const fs::path& path, const Json& doc,
                std::vector<fs::path>& written) {
  write_file_atomic(path, dump(doc));
  written.push_back(path);
}

}  // namespace

fs::path default_grammar_dir() {
  if (const char* env = std::getenv("DIMSCOPE_GRAMMAR_DIR")) return env;
  if (fs::is_directory(DIMSCOPE_DEFAULT_GRAMMAR_DIR)) {
    return DIMSCOPE_DEFAULT_GRAMMAR_DIR;
  }
  // Installed layout: <prefix>/bin/dimscope and <prefix>/share/dimscope/grammars.
  std::error_code ec;
  const fs::path exe = fs::read_symlink("/proc/self/exe", ec);
  if (!ec) return exe.parent_path().parent_path() / "share" / "dimscope" / "grammars";
  return DIMSCOPE_DEFAULT_GRAMMAR_DIR;
}

fs::path resolve_grammar(const std::string& arg, const fs::path& grammar_dir) {
  if (fs::is_regular_file(arg)) return arg;
  const fs::path dir = grammar_dir.empty() ? default_grammar_dir() : grammar_dir;
  const fs::path candidate = dir / (arg + ".json");
  if (fs::is_regular_file(candidate)) return candidate;
  throw Error(ErrorKind::InvalidInput, "grammar '" + arg + "' not found");
}

// ---------------------------------------------------------------- generate

std::vector<fs::path> run_generate(const GenerateOptions& opts) {
  check_format_version(opts.common.format_version);
  if (opts.grammars.empty()) {
    throw Error(ErrorKind::InvalidInput, "no grammar given");
  }
  if (opts.n_sequences == 0 || opts.splits == 0) {
    throw Error(ErrorKind::InvalidParameter, "--n and --splits must be positive");
  }
  std::vector<Mode> modes;
  for (const std::string& m : opts.modes) modes.push_back(parse_mode(m));

  struct Loaded {
    GrammarSpec spec;
    InputRef ref;
  };
  std::vector<Loaded> grammars;
  for (const std::string& g : opts.grammars) {
    const fs::path path = resolve_grammar(g, opts.grammar_dir);
    grammars.push_back({load_grammar_file(path), input_ref(path)});
    for (const std::size_t k : opts.ks) {
      coupling_groups(grammars.back().spec.variable_count(), k);
    }
  }
  prepare_out_dir(opts.common.out);

  std::vector<fs::path> written;
  Json outputs = Json::array();
  for (const Loaded& g : grammars) {
    for (const std::size_t k : opts.ks) {
      for (std::size_t split = 0; split < opts.splits; ++split) {
        DatasetConfig config;
        config.grammar = g.spec.name();
        config.k = k;
        config.mode = Mode::Coherent;
        config.n_sequences = opts.n_sequences;
        config.seed = opts.common.seed;
        config.split_id = split;
        const Dataset coherent = sample_dataset(g.spec, config);
        for (const Mode mode : modes) {
          const Dataset out = mode == Mode::Coherent
                                  ? coherent
                                  : shuffle_dataset(coherent, opts.common.seed);
          const std::string name = g.spec.name() + "_k" + std::to_string(k) +
                                   "_" + std::string(to_string(mode)) + "_s" +
                                   std::to_string(split) + ".jsonl";
          const fs::path path = opts.common.out / name;
          const std::string body = to_jsonl(out);
          write_file_atomic(path, body);
          written.push_back(path);
          Json entry = to_json(out.config);
          entry["file"] = name;
          entry["sha256"] = sha256_hex(body);
          entry["coupling_groups"] = out.groups;
          outputs.push_back(entry);
        }
      }
    }
  }

  Json manifest;
  manifest["format_version"] = kFormatVersion;
  manifest["kind"] = "generate_manifest";
  Json inputs = Json::array();
  for (const Loaded& g : grammars) inputs.push_back(to_json(g.ref));
  manifest["inputs"] = inputs;
  manifest["params"] = Json{{"k", opts.ks},
                            {"modes", opts.modes},
                            {"splits", opts.splits},
                            {"n_sequences", opts.n_sequences},
                            {"seed", opts.common.seed}};
  manifest["outputs"] = outputs;
  write_json(opts.common.out / "generate_manifest.json", manifest, written);
  return written;
}

// ---------------------------------------------------------------------- kc

std::vector<fs::path> run_kc(const KcOptions& opts) {
  check_common(opts.common);
  if (opts.datasets.empty()) {
    throw Error(ErrorKind::InvalidInput, "no dataset given");
  }
  std::vector<fs::path> written;
  for (const fs::path& path : opts.datasets) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(ErrorKind::InvalidInput, "cannot open '" + path.string() + "'");
    }
    const Dataset dataset = read_jsonl(in);
    KCDocument doc;
    doc.input = input_ref(path);
    doc.dataset = dataset.config;
    doc.report = estimate_kc(dataset, opts.level);
    write_json(opts.common.out / (path.stem().string() + ".kc.json"),
               to_json(doc), written);
  }
  return written;
}

// ---------------------------------------------------------------- estimate

namespace {

struct MatrixJob {
  fs::path path;
  EstimateProvenance provenance;
  std::optional<std::pair<std::size_t, std::size_t>> expected_shape;
};

DimEstimate run_estimator(Estimator e, const RepresentationSet& set,
                          const EstimateOptions& opts) {
  switch (e) {
    case Estimator::TwoNN:
      return twonn_estimate(set, opts.discard_fraction);
    case Estimator::Mle:
      return mle_estimate(set, opts.mle_k,
                          parse_mle_averaging(opts.mle_averaging));
    case Estimator::Pca:
      return pca_effective_dim(set, opts.variance_cutoff);
    case Estimator::ParticipationRatio:
      return participation_ratio(set);
  }
  throw Error(ErrorKind::InvalidParameter, "unknown estimator");
}

}  // namespace

std::vector<fs::path> run_estimate(const EstimateOptions& opts) {
  check_common(opts.common);
  std::vector<Estimator> estimators;
  for (const std::string& name : opts.estimators) {
    estimators.push_back(parse_estimator(name));
  }
  parse_mle_averaging(opts.mle_averaging);

  std::vector<MatrixJob> jobs;
  for (const fs::path& mpath : opts.manifests) {
    const Manifest m = manifest_from_json(parse_json_file(mpath), mpath.string());
    const std::string manifest_hash = sha256_file(mpath);
    for (const ManifestLayer& layer : m.layers) {
      MatrixJob job;
      job.path = mpath.parent_path() / layer.file;
      job.provenance.model = m.model_id;
      job.provenance.revision = m.revision;
      job.provenance.hidden_dim = m.hidden_size;
      job.provenance.layer = layer.layer;
      job.provenance.dataset_hash = m.dataset_hash;
      job.provenance.manifest_sha256 = manifest_hash;
      job.expected_shape = {layer.n_rows, layer.n_cols};
      jobs.push_back(std::move(job));
    }
  }
  const std::string dataset_hash =
      opts.dataset ? sha256_file(*opts.dataset) : std::string();
  for (std::size_t i = 0; i < opts.matrices.size(); ++i) {
    MatrixJob job;
    job.path = opts.matrices[i];
    job.provenance.model = opts.model;
    job.provenance.layer = static_cast<int>(i);
    job.provenance.dataset_hash = dataset_hash;
    jobs.push_back(std::move(job));
  }
  if (jobs.empty()) {
    throw Error(ErrorKind::InvalidInput, "no matrix files or manifests given");
  }

  std::vector<fs::path> written;
  for (MatrixJob& job : jobs) {
    const std::string bytes = read_file(job.path);
    PointMatrix matrix;
    try {
      matrix = decode_rsf(bytes);
    } catch (const Error& e) {
      throw Error(e.kind(), job.path.string() + ": " + e.what());
    }
    const auto rows = static_cast<std::size_t>(matrix.rows());
    const auto cols = static_cast<std::size_t>(matrix.cols());
    if (job.expected_shape &&
        *job.expected_shape != std::make_pair(rows, cols)) {
      throw Error(ErrorKind::Format,
                  job.path.string() + ": shape does not match its manifest");
    }
    if (job.provenance.hidden_dim == 0) job.provenance.hidden_dim = cols;
    const RepresentationSet set(std::move(matrix),
                                {job.path.filename().string(),
                                 job.provenance.layer,
                                 job.provenance.dataset_hash});
    const InputRef ref{job.path.filename().string(), sha256_hex(bytes)};
    // Keyed by dataset, else by manifest, else by the matrix itself.
    const std::string& key = !job.provenance.dataset_hash.empty()
                                 ? job.provenance.dataset_hash
                                 : job.provenance.manifest_sha256
                                       ? *job.provenance.manifest_sha256
                                       : ref.sha256;
    const std::string prefix = sanitize(job.provenance.model) + "." +
                               key.substr(0, 12) + "." + job.path.stem().string();
    for (const Estimator e : estimators) {
      EstimateDocument doc;
      doc.input = ref;
      doc.n_rows = rows;
      doc.n_cols = cols;
      doc.provenance = job.provenance;
      doc.estimate = run_estimator(e, set, opts);
      write_json(opts.common.out /
                     (prefix + "." + std::string(to_string(e)) + ".json"),
                 to_json(doc), written);
    }
  }
  return written;
}

// --------------------------------------------------------------- correlate

namespace {

struct ConfigKey {
  std::string grammar;
  std::string mode;
  std::size_t k;
  std::uint64_t split;
  std::string hash;

  auto tie() const { return std::tie(grammar, mode, k, split, hash); }
  bool operator<(const ConfigKey& o) const { return tie() < o.tie(); }
};

struct GroupKey {
  std::string model;
  std::string estimator;
  auto tie() const { return std::tie(model, estimator); }
  bool operator<(const GroupKey& o) const { return tie() < o.tie(); }
};

struct LayerValue {
  int layer;
  DimEstimate estimate;
};

std::vector<fs::path> expand_inputs(const std::vector<fs::path>& inputs) {
  std::vector<fs::path> out;
  for (const fs::path& p : inputs) {
    if (fs::is_directory(p)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(p)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
          found.push_back(entry.path());
        }
      }
      std::sort(found.begin(), found.end());
      out.insert(out.end(), found.begin(), found.end());
    } else {
      out.push_back(p);
    }
  }
  return out;
}

}  // namespace

std::vector<fs::path> run_correlate(const CorrelateOptions& opts) {
  check_common(opts.common);
  std::vector<Granularity> granularities;
  for (const std::string& g : opts.granularities) {
    granularities.push_back(parse_granularity(g));
  }
  const PValueMethod p_method = opts.exact_p ? PValueMethod::ExactPermutation
                                             : PValueMethod::TApproximation;

  std::map<std::string, KCDocument> kc_by_hash;
  std::map<GroupKey, std::map<std::string, std::vector<LayerValue>>> groups;
  std::map<GroupKey, std::size_t> hidden_dims;
  std::vector<InputRef> refs;

  for (const fs::path& path : expand_inputs(opts.inputs)) {
    const Json doc = parse_json_file(path);
    const std::string kind = doc.is_object() ? doc.value("kind", "") : "";
    const bool explicit_file =
        std::find(opts.inputs.begin(), opts.inputs.end(), path) != opts.inputs.end();
    if (kind == "kc_report") {
      KCDocument kc = kc_document_from_json(doc, path.string());
      const std::string hash = kc.input.sha256;
      auto [it, inserted] = kc_by_hash.emplace(hash, std::move(kc));
      if (!inserted) {
        throw Error(ErrorKind::InvalidInput,
                    "two KC reports for dataset " + hash.substr(0, 12));
      }
    } else if (kind == "dim_estimate") {
      EstimateDocument est = estimate_document_from_json(doc, path.string());
      if (est.provenance.dataset_hash.empty()) {
        throw Error(ErrorKind::InvalidInput,
                    path.string() + ": estimate carries no dataset hash");
      }
      const GroupKey key{est.provenance.model,
                         std::string(to_string(est.estimate.estimator))};
      groups[key][est.provenance.dataset_hash].push_back(
          {est.provenance.layer.value_or(0), std::move(est.estimate)});
      hidden_dims[key] = est.provenance.hidden_dim;
    } else if (explicit_file) {
      throw Error(ErrorKind::Format,
                  path.string() + ": not a kc_report or dim_estimate document");
    } else {
      continue;
    }
    refs.push_back(input_ref(path));
  }
  if (groups.empty()) {
    throw Error(ErrorKind::InvalidInput, "no dimension estimates given");
  }
  std::set<int> levels;
  for (const auto& [hash, kc] : kc_by_hash) levels.insert(kc.report.level);
  if (levels.size() > 1) {
    throw Error(ErrorKind::InvalidInput,
                "KC reports mix compression levels");
  }

  auto config_key = [&](const std::string& hash) {
    const KCDocument& kc = kc_by_hash.at(hash);
    return ConfigKey{kc.dataset.grammar, std::string(to_string(kc.dataset.mode)),
                     kc.dataset.k, kc.dataset.split_id, hash};
  };

  Json correlations = Json::array();
  Json profiles_json = Json::array();
  Json deltas = Json::array();
  std::ostringstream corr_csv;
  corr_csv << "model,estimator,granularity,layer,rho,p_value,n,marker\n";
  std::ostringstream profile_csv;
  profile_csv << "model,estimator,dataset_hash,grammar,k,mode,split,layer,value\n";

  std::map<std::string, std::map<std::string, std::string>> mean_table;
  std::map<GroupKey, std::map<int, std::string>> layer_table;
  std::set<std::string> models;
  std::set<int> all_layers;
  std::map<std::string, std::map<std::string, std::vector<WidthPoint>>> width_points;
  std::vector<fs::path> written;
  std::vector<std::pair<std::string, std::vector<ChartSeries>>> charts;

  for (auto& [key, by_dataset] : groups) {
    std::vector<ConfigKey> configs;
    for (const auto& [hash, values] : by_dataset) {
      if (!kc_by_hash.contains(hash)) {
        throw Error(ErrorKind::InvalidInput,
                    "misaligned inputs: no KC report for dataset " +
                        hash.substr(0, 12) + " (" + key.model + ", " +
                        key.estimator + ")");
      }
      configs.push_back(config_key(hash));
    }
    std::sort(configs.begin(), configs.end());
    if (configs.size() < 3) {
      throw Error(ErrorKind::InvalidInput,
                  "need at least 3 aligned dataset configurations for " +
                      key.model + "/" + key.estimator + ", got " +
                      std::to_string(configs.size()));
    }

    std::vector<KCReport> kc;
    std::vector<LayerProfile> profiles;
    std::vector<ChartSeries> series;
    for (const ConfigKey& c : configs) {
      std::vector<LayerValue> values = by_dataset.at(c.hash);
      std::sort(values.begin(), values.end(),
                [](const LayerValue& a, const LayerValue& b) { return a.layer < b.layer; });
      LayerProfile profile;
      profile.model_label = key.model;
      profile.hidden_dim = hidden_dims.at(key);
      profile.dataset_key = c.hash;
      for (LayerValue& v : values) profile.per_layer.emplace_back(v.layer, v.estimate);
      validate_profile(profile);
      kc.push_back(kc_by_hash.at(c.hash).report);

      const double mean = mean_over_layers(profile);
      Json pj;
      pj["model"] = key.model;
      pj["estimator"] = key.estimator;
      pj["dataset_hash"] = c.hash;
      pj["grammar"] = c.grammar;
      pj["k"] = c.k;
      pj["mode"] = c.mode;
      pj["split"] = c.split;
      pj["hidden_dim"] = profile.hidden_dim;
      pj["mean"] = mean;
      pj["layers"] = profile.layers();
      pj["values"] = profile.values();
      profiles_json.push_back(pj);
      ChartSeries s;
      s.label = c.grammar + " k=" + std::to_string(c.k) + " " + c.mode +
                " s" + std::to_string(c.split);
      s.dashed = c.mode == "shuffled";
      for (const auto& [layer, est] : profile.per_layer) {
        profile_csv << csv_field(key.model) << ',' << key.estimator << ','
                    << c.hash << ',' << csv_field(c.grammar) << ',' << c.k << ','
                    << c.mode << ',' << c.split << ',' << layer << ','
                    << fmt_number(est.value) << '\n';
        s.x.push_back(layer);
        s.y.push_back(est.value);
        all_layers.insert(layer);
      }
      series.push_back(std::move(s));
      width_points[key.estimator][c.hash].push_back({profile.hidden_dim, mean});
      profiles.push_back(std::move(profile));
    }
    models.insert(key.model);
    charts.emplace_back(sanitize(key.model) + "." + key.estimator, std::move(series));

    for (const Granularity g : granularities) {
      for (const LayerCorrelation& lc :
           correlate_kc_vs_dimension(kc, profiles, g, p_method)) {
        Json cj;
        cj["model"] = key.model;
        cj["estimator"] = key.estimator;
        cj["granularity"] = std::string(to_string(g));
        cj["layer"] = lc.layer ? Json(*lc.layer) : Json(nullptr);
        cj["rho"] = lc.result.rho;
        cj["p_value"] = lc.result.p_value;
        cj["n"] = lc.result.n;
        cj["significant_05"] = lc.significant_05;
        cj["significant_10"] = lc.significant_10;
        cj["marker"] = lc.marker;
        correlations.push_back(cj);
        corr_csv << csv_field(key.model) << ',' << key.estimator << ','
                 << to_string(g) << ','
                 << (lc.layer ? std::to_string(*lc.layer) : std::string()) << ','
                 << fmt_number(lc.result.rho) << ','
                 << fmt_number(lc.result.p_value) << ',' << lc.result.n << ','
                 << lc.marker << '\n';
        const std::string cell = fmt_fixed2(lc.result.rho) + lc.marker;
        if (lc.layer) {
          layer_table[key][*lc.layer] = cell;
        } else {
          mean_table[key.estimator][key.model] = cell;
        }
      }
    }

    // Delta between the smallest and largest k within each (grammar, mode, split).
    std::map<std::tuple<std::string, std::string, std::uint64_t>,
             std::vector<std::size_t>>
        cells;
    for (std::size_t i = 0; i < configs.size(); ++i) {
      cells[{configs[i].grammar, configs[i].mode, configs[i].split}].push_back(i);
    }
    for (const auto& [cell, members] : cells) {
      std::size_t lo = members.front();
      std::size_t hi = members.front();
      for (const std::size_t i : members) {
        if (configs[i].k < configs[lo].k) lo = i;
        if (configs[i].k > configs[hi].k) hi = i;
      }
      if (configs[lo].k == configs[hi].k) continue;
      Json dj;
      dj["model"] = key.model;
      dj["estimator"] = key.estimator;
      dj["grammar"] = std::get<0>(cell);
      dj["mode"] = std::get<1>(cell);
      dj["split"] = std::get<2>(cell);
      dj["k_low"] = configs[lo].k;
      dj["k_high"] = configs[hi].k;
      dj["delta"] = delta_dimension(profiles[lo], profiles[hi]);
      deltas.push_back(dj);
    }
  }

  Json regressions = Json::array();
  for (const auto& [estimator, by_hash] : width_points) {
    for (const auto& [hash, points] : by_hash) {
      std::set<std::size_t> widths;
      for (const WidthPoint& p : points) widths.insert(p.hidden_dim);
      if (widths.size() < 3) continue;
      const RegressionResult r = fit_dimension_vs_width(points);
      const ConfigKey c = config_key(hash);
      regressions.push_back(Json{{"estimator", estimator},
                                 {"dataset_hash", hash},
                                 {"grammar", c.grammar},
                                 {"k", c.k},
                                 {"mode", c.mode},
                                 {"split", c.split},
                                 {"alpha", r.alpha},
                                 {"intercept", r.intercept},
                                 {"r_value", r.r_value},
                                 {"p_value", r.p_value},
                                 {"n", r.n}});
    }
  }

  Json configurations = Json::array();
  for (const auto& [hash, kc] : kc_by_hash) {
    Json cj = to_json(kc.dataset);
    cj["dataset_hash"] = hash;
    cj["compressed_kb"] = kc.report.compressed_kb;
    configurations.push_back(cj);
  }
  std::sort(refs.begin(), refs.end(), [](const InputRef& a, const InputRef& b) {
    return std::tie(a.file, a.sha256) < std::tie(b.file, b.sha256);
  });
  Json inputs = Json::array();
  for (const InputRef& r : refs) inputs.push_back(to_json(r));

  Json report;
  report["format_version"] = kFormatVersion;
  report["kind"] = "analysis_report";
  report["inputs"] = inputs;
  report["p_value_method"] =
      opts.exact_p ? "exact_permutation" : "t_approximation";
  report["significance"] = Json{{"*", 0.05}, {"†", 0.1}};
  report["configurations"] = configurations;
  report["correlations"] = correlations;
  report["profiles"] = profiles_json;
  report["deltas"] = deltas;
  report["width_regressions"] = regressions;
  write_json(opts.common.out / "analysis.json", report, written);

  write_file_atomic(opts.common.out / "correlations.csv", corr_csv.str());
  written.push_back(opts.common.out / "correlations.csv");
  write_file_atomic(opts.common.out / "profiles.csv", profile_csv.str());
  written.push_back(opts.common.out / "profiles.csv");

  if (!mean_table.empty()) {
    std::ostringstream t;
    t << "spearman_rho";
    for (const std::string& m : models) t << ',' << csv_field(m);
    t << '\n';
    for (const auto& [estimator, row] : mean_table) {
      t << estimator;
      for (const std::string& m : models) {
        const auto it = row.find(m);
        t << ',' << (it == row.end() ? std::string() : it->second);
      }
      t << '\n';
    }
    write_file_atomic(opts.common.out / "table_mean_layers.csv", t.str());
    written.push_back(opts.common.out / "table_mean_layers.csv");
  }
  if (!layer_table.empty()) {
    std::ostringstream t;
    t << "model,estimator";
    for (const int l : all_layers) t << ",layer_" << l;
    t << '\n';
    for (const auto& [key, row] : layer_table) {
      t << csv_field(key.model) << ',' << key.estimator;
      for (const int l : all_layers) {
        const auto it = row.find(l);
        t << ',' << (it == row.end() ? std::string() : it->second);
      }
      t << '\n';
    }
    write_file_atomic(opts.common.out / "table_per_layer.csv", t.str());
    written.push_back(opts.common.out / "table_per_layer.csv");
  }

  if (opts.svg) {
    for (const auto& [name, series] : charts) {
      const fs::path path = opts.common.out / (name + ".layers.svg");
      write_file_atomic(path, render_line_chart(name, "layer", "dimension", series));
      written.push_back(path);
    }
  }
  return written;
}

// ------------------------------------------------------------------- synth

std::vector<fs::path> run_synth(const SynthOptions& opts) {
  check_common(opts.common);
  if (opts.layers == 0) {
    throw Error(ErrorKind::InvalidParameter, "--layers must be positive");
  }
  ManifoldSpec base = opts.spec;
  base.seed = opts.common.seed;
  validate(base);

  Manifest manifest;
  manifest.model_id = opts.model;
  manifest.hidden_size = base.ambient_dim;
  if (opts.dataset) {
    manifest.dataset_hash = sha256_file(*opts.dataset);
    manifest.dataset_path = opts.dataset->filename().string();
  }
  manifest.synth = base;

  std::vector<fs::path> written;
  for (std::size_t layer = 0; layer < opts.layers; ++layer) {
    ManifoldSpec spec = base;
    spec.seed = derive_seed(base.seed, {layer});
    const RepresentationSet set = sample_manifold(spec);
    char name[32];
    std::snprintf(name, sizeof(name), "layer_%03zu.rsf", layer);
    write_rsf(opts.common.out / name, set.points());
    written.push_back(opts.common.out / name);
    manifest.layers.push_back({static_cast<int>(layer), name, set.n_points(),
                               set.ambient_dim()});
  }
  write_json(opts.common.out / "manifest.json", to_json(manifest), written);
  return written;
}

}  // namespace dimscope::cli
