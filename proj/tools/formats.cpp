#include "formats.hpp"

#include "dimscope/error.hpp"
#include "dimscope/fileio.hpp"
#include "dimscope/hash.hpp"

namespace dimscope::cli {
namespace {

template <typename T>
T field(const Json& j, const char* key, const std::string& origin) {
  if (!j.contains(key)) {
    throw Error(ErrorKind::Format,
                origin + ": missing field '" + std::string(key) + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Format,
                origin + ": field '" + key + "': " + e.what());
  }
}

Json number_map(const std::map<std::string, double>& m) {
  Json out = Json::object();
  for (const auto& [k, v] : m) out[k] = v;
  return out;
}

std::optional<std::string> optional_string(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<std::string>();
}

}  // namespace

void check_format_version(int version) {
  if (version != kFormatVersion) {
    throw Error(ErrorKind::InvalidParameter,
                "unsupported format version " + std::to_string(version) +
                    " (this build writes " + std::to_string(kFormatVersion) +
                    ")");
  }
}

void expect_document(const Json& doc, std::string_view kind,
                     const std::string& origin) {
  if (!doc.is_object()) {
    throw Error(ErrorKind::Format, origin + ": not a JSON object");
  }
  const auto version = field<int>(doc, "format_version", origin);
  if (version != kFormatVersion) {
    throw Error(ErrorKind::Format, origin + ": format_version " +
                                       std::to_string(version) +
                                       " is not supported");
  }
  const auto actual = field<std::string>(doc, "kind", origin);
  if (actual != kind) {
    throw Error(ErrorKind::Format, origin + ": expected a '" +
                                       std::string(kind) + "' document, got '" +
                                       actual + "'");
  }
}

Json parse_json_file(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Format, path.string() + ": byte offset " +
                                       std::to_string(e.byte) + ": " + e.what());
  }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json to_json(const InputRef& ref) {
  return Json{{"file", ref.file}, {"sha256", ref.sha256}};
}

InputRef input_ref(const std::filesystem::path& path) {
  return {path.filename().string(), sha256_file(path)};
}

Json to_json(const DimEstimate& est) {
  Json j;
  j["estimator"] = std::string(to_string(est.estimator));
  j["value"] = est.value;
  j["params"] = number_map(est.params);
  j["n_used"] = est.n_used;
  j["diagnostics"] = number_map(est.diagnostics);
  if (!est.explained_variance.empty()) {
    j["explained_variance"] = est.explained_variance;
  }
  return j;
}

DimEstimate dim_estimate_from_json(const Json& j) {
  const std::string origin = "estimate";
  DimEstimate est;
  est.estimator = parse_estimator(field<std::string>(j, "estimator", origin));
  est.value = field<double>(j, "value", origin);
  est.n_used = field<std::size_t>(j, "n_used", origin);
  if (j.contains("params")) {
    for (const auto& [k, v] : j["params"].items()) est.params[k] = v.get<double>();
  }
  if (j.contains("diagnostics")) {
    for (const auto& [k, v] : j["diagnostics"].items()) {
      est.diagnostics[k] = v.get<double>();
    }
  }
  if (j.contains("explained_variance")) {
    est.explained_variance = j["explained_variance"].get<std::vector<double>>();
  }
  return est;
}

Json to_json(const DatasetConfig& c) {
  return Json{{"grammar", c.grammar},
              {"k", c.k},
              {"mode", std::string(to_string(c.mode))},
              {"n_sequences", c.n_sequences},
              {"seed", c.seed},
              {"split", c.split_id}};
}

DatasetConfig dataset_config_from_json(const Json& j) {
  const std::string origin = "dataset";
  DatasetConfig c;
  c.grammar = field<std::string>(j, "grammar", origin);
  c.k = field<std::size_t>(j, "k", origin);
  c.mode = parse_mode(field<std::string>(j, "mode", origin));
  c.n_sequences = field<std::size_t>(j, "n_sequences", origin);
  c.seed = field<std::uint64_t>(j, "seed", origin);
  c.split_id = field<std::uint64_t>(j, "split", origin);
  return c;
}

Json to_json(const ManifoldSpec& s) {
  return Json{{"kind", std::string(to_string(s.kind))},
              {"intrinsic_dim", s.intrinsic_dim},
              {"ambient_dim", s.ambient_dim},
              {"n_points", s.n_points},
              {"noise_sigma", s.noise_sigma},
              {"seed", s.seed}};
}

ManifoldSpec manifold_spec_from_json(const Json& j) {
  const std::string origin = "manifold";
  ManifoldSpec s;
  s.kind = parse_manifold_kind(field<std::string>(j, "kind", origin));
  s.intrinsic_dim = field<std::size_t>(j, "intrinsic_dim", origin);
  s.ambient_dim = field<std::size_t>(j, "ambient_dim", origin);
  s.n_points = field<std::size_t>(j, "n_points", origin);
  s.noise_sigma = field<double>(j, "noise_sigma", origin);
  s.seed = field<std::uint64_t>(j, "seed", origin);
  return s;
}

Json to_json(const KCDocument& doc) {
  const KCReport& r = doc.report;
  Json j;
  j["format_version"] = kFormatVersion;
  j["kind"] = "kc_report";
  j["input"] = to_json(doc.input);
  j["dataset"] = to_json(doc.dataset);
  j["raw_bytes"] = r.raw_bytes;
  j["compressed_bytes"] = r.compressed_bytes;
  j["compressed_kb"] = r.compressed_kb;
  j["bytes_per_kb"] = 1000;
  j["compressor"] = r.compressor;
  j["compressor_version"] = r.compressor_version;
  j["level"] = r.level;
  j["serialization"] = r.serialization;
  return j;
}

KCDocument kc_document_from_json(const Json& j, const std::string& origin) {
  expect_document(j, "kc_report", origin);
  KCDocument doc;
  const Json& in = j.at("input");
  doc.input = {field<std::string>(in, "file", origin),
               field<std::string>(in, "sha256", origin)};
  doc.dataset = dataset_config_from_json(j.at("dataset"));
  doc.report.raw_bytes = field<std::size_t>(j, "raw_bytes", origin);
  doc.report.compressed_bytes = field<std::size_t>(j, "compressed_bytes", origin);
  doc.report.compressed_kb = field<double>(j, "compressed_kb", origin);
  doc.report.compressor = field<std::string>(j, "compressor", origin);
  doc.report.compressor_version =
      field<std::string>(j, "compressor_version", origin);
  doc.report.level = field<int>(j, "level", origin);
  doc.report.serialization = field<std::string>(j, "serialization", origin);
  return doc;
}

Json to_json(const EstimateDocument& doc) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["kind"] = "dim_estimate";
  Json input = to_json(doc.input);
  input["n_rows"] = doc.n_rows;
  input["n_cols"] = doc.n_cols;
  j["input"] = input;
  const EstimateProvenance& p = doc.provenance;
  Json prov;
  prov["model"] = p.model;
  prov["revision"] = p.revision ? Json(*p.revision) : Json(nullptr);
  prov["hidden_dim"] = p.hidden_dim;
  prov["layer"] = p.layer ? Json(*p.layer) : Json(nullptr);
  prov["dataset_hash"] = p.dataset_hash;
  prov["manifest_sha256"] =
      p.manifest_sha256 ? Json(*p.manifest_sha256) : Json(nullptr);
  j["provenance"] = prov;
  j["estimate"] = to_json(doc.estimate);
  return j;
}

EstimateDocument estimate_document_from_json(const Json& j,
                                             const std::string& origin) {
  expect_document(j, "dim_estimate", origin);
  EstimateDocument doc;
  const Json& in = j.at("input");
  doc.input = {field<std::string>(in, "file", origin),
               field<std::string>(in, "sha256", origin)};
  doc.n_rows = field<std::size_t>(in, "n_rows", origin);
  doc.n_cols = field<std::size_t>(in, "n_cols", origin);
  const Json& p = j.at("provenance");
  doc.provenance.model = field<std::string>(p, "model", origin);
  doc.provenance.revision = optional_string(p, "revision");
  doc.provenance.hidden_dim = field<std::size_t>(p, "hidden_dim", origin);
  if (p.contains("layer") && !p["layer"].is_null()) {
    doc.provenance.layer = p["layer"].get<int>();
  }
  doc.provenance.dataset_hash = field<std::string>(p, "dataset_hash", origin);
  doc.provenance.manifest_sha256 = optional_string(p, "manifest_sha256");
  doc.estimate = dim_estimate_from_json(j.at("estimate"));
  return doc;
}

Json to_json(const Manifest& m) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["kind"] = "representation_manifest";
  j["model_id"] = m.model_id;
  j["revision"] = m.revision ? Json(*m.revision) : Json(nullptr);
  j["hidden_size"] = m.hidden_size;
  j["tokenizer_hash"] = m.tokenizer_hash;
  j["dataset_hash"] = m.dataset_hash;
  j["dataset_path"] = m.dataset_path;
  Json layers = Json::array();
  for (const ManifestLayer& l : m.layers) {
    layers.push_back(Json{{"layer", l.layer},
                          {"file", l.file},
                          {"n_rows", l.n_rows},
                          {"n_cols", l.n_cols}});
  }
  j["layers"] = layers;
  j["skipped"] = m.skipped;
  if (m.synth) j["synth"] = to_json(*m.synth);
  return j;
}

Manifest manifest_from_json(const Json& j, const std::string& origin) {
  expect_document(j, "representation_manifest", origin);
  Manifest m;
  try {
    m.model_id = field<std::string>(j, "model_id", origin);
    m.revision = optional_string(j, "revision");
    m.hidden_size = field<std::size_t>(j, "hidden_size", origin);
    m.tokenizer_hash = j.value("tokenizer_hash", std::string());
    m.dataset_hash = j.value("dataset_hash", std::string());
    m.dataset_path = j.value("dataset_path", std::string());
    for (const Json& l : j.at("layers")) {
      m.layers.push_back({field<int>(l, "layer", origin),
                          field<std::string>(l, "file", origin),
                          field<std::size_t>(l, "n_rows", origin),
                          field<std::size_t>(l, "n_cols", origin)});
    }
    if (j.contains("skipped")) {
      m.skipped = j["skipped"].get<std::vector<std::size_t>>();
    }
    if (j.contains("synth")) m.synth = manifold_spec_from_json(j["synth"]);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Format, origin + ": " + e.what());
  }
  return m;
}

}  // namespace dimscope::cli
