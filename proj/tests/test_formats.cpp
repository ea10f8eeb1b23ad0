#include <gtest/gtest.h>

#include <functional>

#include "dimscope/error.hpp"
#include "formats.hpp"

using namespace dimscope;
using namespace dimscope::cli;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::Io;
}

}  // namespace

TEST(Formats, ExtractorManifestContract) {
  // Layout written by the activation extractor.
  const Json doc = Json::parse(R"({
    "format_version": 1,
    "kind": "representation_manifest",
    "model_id": "EleutherAI/pythia-14m",
    "revision": "step143000",
    "hidden_size": 128,
    "tokenizer_hash": "ab12",
    "dataset_hash": "cd34",
    "dataset_path": "len17_k1_coherent_s0.jsonl",
    "layers": [
      {"layer": 0, "file": "layer_000.rsf", "n_rows": 100, "n_cols": 128},
      {"layer": 1, "file": "layer_001.rsf", "n_rows": 100, "n_cols": 128}
    ],
    "skipped": [17]
  })");
  const Manifest m = manifest_from_json(doc, "manifest.json");
  EXPECT_EQ(m.model_id, "EleutherAI/pythia-14m");
  EXPECT_EQ(m.revision.value(), "step143000");
  EXPECT_EQ(m.hidden_size, 128u);
  ASSERT_EQ(m.layers.size(), 2u);
  EXPECT_EQ(m.layers[1].file, "layer_001.rsf");
  EXPECT_EQ(m.layers[1].n_cols, 128u);
  EXPECT_EQ(m.skipped, (std::vector<std::size_t>{17}));
  EXPECT_FALSE(m.synth.has_value());
  EXPECT_EQ(to_json(m).dump(), to_json(manifest_from_json(to_json(m), "x")).dump());
}

TEST(Formats, ManifestRejectsWrongKindVersionAndShape) {
  Json doc = Json::parse(
      R"({"format_version": 1, "kind": "representation_manifest", "model_id": "m",
          "hidden_size": 4, "layers": [{"layer": 0, "file": "a.rsf", "n_rows": 3}]})");
  EXPECT_EQ(kind_of([&] { manifest_from_json(doc, "m"); }), ErrorKind::Format);
  doc["layers"][0]["n_cols"] = 4;
  EXPECT_NO_THROW(manifest_from_json(doc, "m"));
  doc["format_version"] = 2;
  EXPECT_EQ(kind_of([&] { manifest_from_json(doc, "m"); }), ErrorKind::Format);
  doc["format_version"] = 1;
  doc["kind"] = "dim_estimate";
  EXPECT_EQ(kind_of([&] { manifest_from_json(doc, "m"); }), ErrorKind::Format);
}

TEST(Formats, EstimateDocumentRoundTrip) {
  EstimateDocument doc;
  doc.input = {"layer_003.rsf", "00ff"};
  doc.n_rows = 10;
  doc.n_cols = 4;
  doc.provenance.model = "m";
  doc.provenance.hidden_dim = 4;
  doc.provenance.layer = 3;
  doc.provenance.dataset_hash = "beef";
  doc.estimate.estimator = Estimator::Pca;
  doc.estimate.value = 2.0;
  doc.estimate.params["variance_cutoff"] = 0.99;
  doc.estimate.explained_variance = {0.7, 0.995, 1.0, 1.0};
  const Json j = to_json(doc);
  EXPECT_EQ(j["format_version"], 1);
  EXPECT_EQ(j["kind"], "dim_estimate");
  EXPECT_EQ(j["input"]["sha256"], "00ff");
  const EstimateDocument back = estimate_document_from_json(j, "e");
  EXPECT_EQ(back.provenance.layer.value(), 3);
  EXPECT_EQ(back.estimate.estimator, Estimator::Pca);
  EXPECT_EQ(back.estimate.explained_variance, doc.estimate.explained_variance);
  EXPECT_EQ(to_json(back).dump(), j.dump());
}

TEST(Formats, KcDocumentRoundTrip) {
  KCDocument doc;
  doc.input = {"a.jsonl", "1234"};
  doc.dataset.grammar = "len17";
  doc.dataset.k = 3;
  doc.dataset.mode = Mode::Shuffled;
  doc.dataset.n_sequences = 10;
  doc.report.raw_bytes = 100;
  doc.report.compressed_bytes = 40;
  doc.report.compressed_kb = 0.04;
  doc.report.compressor = "gzip/zlib";
  doc.report.compressor_version = "1.2.11";
  doc.report.serialization = "text-lf-v1";
  const Json j = to_json(doc);
  EXPECT_EQ(j["bytes_per_kb"], 1000);
  const KCDocument back = kc_document_from_json(j, "k");
  EXPECT_EQ(back.dataset.mode, Mode::Shuffled);
  EXPECT_EQ(back.dataset.k, 3u);
  EXPECT_EQ(to_json(back).dump(), j.dump());
}

TEST(Formats, VersionCheck) {
  EXPECT_NO_THROW(check_format_version(1));
  EXPECT_EQ(kind_of([] { check_format_version(2); }), ErrorKind::InvalidParameter);
}

TEST(Formats, DumpIsStable) {
  Json j;
  j["b"] = 1;
  j["a"] = 0.1;
  EXPECT_EQ(dump(j), "{\n  \"b\": 1,\n  \"a\": 0.1\n}\n");
}
