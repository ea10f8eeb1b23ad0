#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dimscope/fileio.hpp"
#include "dimscope/rsf.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("dimscope_cli_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  CliResult run(const std::string& args) const {
    const fs::path out = dir_ / "stdout.txt";
    const fs::path err = dir_ / "stderr.txt";
    const std::string cmd = std::string(DIMSCOPE_CLI_PATH) + " " + args + " > " +
                            out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, dimscope::read_file(out),
            dimscope::read_file(err)};
  }

  fs::path path(const std::string& name) const { return dir_ / name; }
  std::string p(const std::string& name) const { return path(name).string(); }

  static std::size_t line_count(const fs::path& f) {
    const std::string s = dimscope::read_file(f);
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
  }

  static nlohmann::json json(const fs::path& f) {
    return nlohmann::json::parse(dimscope::read_file(f));
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, HelpAndUsageErrors) {
  EXPECT_EQ(run("--help").code, 0);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("generate --grammar len5 --splits nope").code, 2);
}

TEST_F(Cli, GenerateSingleSequence) {
  const CliResult r = run("generate --grammar len5 --k 1 --mode coherent --splits 1 --n 1 --out " +
                    p("g"));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(line_count(path("g/len5_k1_coherent_s0.jsonl")), 1u);
  const auto manifest = json(path("g/generate_manifest.json"));
  EXPECT_EQ(manifest["format_version"], 1);
  EXPECT_EQ(manifest["outputs"].size(), 1u);
  EXPECT_EQ(manifest["inputs"][0]["file"], "len5.json");
}

TEST_F(Cli, GenerateFullGrid) {
  const CliResult r = run("generate --grammar len17 --seed 3 --out " + p("g"));
  ASSERT_EQ(r.code, 0) << r.err;
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(path("g"))) {
    if (e.path().extension() != ".jsonl") continue;
    ++files;
    EXPECT_EQ(line_count(e.path()), 10000u) << e.path();
  }
  EXPECT_EQ(files, 40u);
}

TEST_F(Cli, CouplingBeyondSlotCountFails) {
  const CliResult r = run("generate --grammar len17 --k 14 --out " + p("g"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("invalid-parameter"), std::string::npos);
  EXPECT_FALSE(fs::exists(path("g/len17_k1_coherent_s0.jsonl")));
}

TEST_F(Cli, UnknownGrammarAndBadVersion) {
  EXPECT_EQ(run("generate --grammar nosuch --out " + p("g")).code, 2);
  EXPECT_EQ(run("generate --grammar len5 --format-version 9 --out " + p("g")).code, 2);
}

TEST_F(Cli, UnwritableOutputDirectory) {
  dimscope::write_file_atomic(path("blocker"), "x");
  EXPECT_EQ(run("generate --grammar len5 --n 1 --out " + p("blocker/sub")).code, 2);
}

TEST_F(Cli, SynthThenEstimate) {
  ASSERT_EQ(run("synth --kind hypercube --intrinsic-dim 5 --ambient-dim 30 --n 3000 "
                "--layers 2 --out " + p("cube")).code, 0);
  ASSERT_EQ(run("synth --kind linear_subspace --intrinsic-dim 3 --ambient-dim 64 "
                "--n 200 --out " + p("flat")).code, 0);
  const CliResult r = run("estimate --manifest " + p("cube/manifest.json") + " --manifest " +
                    p("flat/manifest.json") + " --estimator twonn --estimator pca --out " +
                    p("est"));
  ASSERT_EQ(r.code, 0) << r.err;
  std::size_t seen = 0;
  for (const auto& e : fs::directory_iterator(path("est"))) {
    const auto doc = json(e.path());
    EXPECT_EQ(doc["kind"], "dim_estimate");
    EXPECT_EQ(doc["input"]["sha256"].get<std::string>().size(), 64u);
    const double v = doc["estimate"]["value"];
    const bool cube = doc["provenance"]["hidden_dim"] == 30;
    if (doc["estimate"]["estimator"] == "twonn" && cube) {
      EXPECT_NEAR(v, 5.0, 0.5);
      ++seen;
    }
    if (doc["estimate"]["estimator"] == "pca" && !cube) {
      EXPECT_EQ(v, 3.0);
      ++seen;
    }
  }
  EXPECT_EQ(seen, 3u);
}

TEST_F(Cli, TruncatedRsfIsFormatError) {
  const std::string good = dimscope::encode_rsf(dimscope::PointMatrix::Ones(4, 3));
  dimscope::write_file_atomic(path("cut.rsf"), good.substr(0, 30));
  const CliResult r = run("estimate " + p("cut.rsf") + " --out " + p("est"));
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("byte offset 30"), std::string::npos) << r.err;
}

TEST_F(Cli, DegenerateInputExitsFour) {
  dimscope::write_file_atomic(path("flat.rsf"),
                              dimscope::encode_rsf(dimscope::PointMatrix::Ones(5, 3)));
  EXPECT_EQ(run("estimate " + p("flat.rsf") + " --estimator pca --out " + p("est")).code, 4);
}

TEST_F(Cli, CorrelateAlignsAndRanks) {
  // Eight datasets; each gets a synthetic stand-in whose rank tracks its KC order.
  ASSERT_EQ(run("generate --grammar len11 --splits 1 --n 300 --out " + p("d")).code, 0);
  ASSERT_EQ(run("kc " + p("d") + "/*.jsonl --out " + p("kc")).code, 0);
  std::vector<std::pair<double, std::string>> by_kb;
  for (const auto& e : fs::directory_iterator(path("kc"))) {
    const auto doc = json(e.path());
    by_kb.emplace_back(doc["compressed_kb"].get<double>(), doc["input"]["file"].get<std::string>());
  }
  ASSERT_EQ(by_kb.size(), 8u);
  std::sort(by_kb.begin(), by_kb.end());
  for (std::size_t i = 0; i < by_kb.size(); ++i) {
    const std::string stem = fs::path(by_kb[i].second).stem().string();
    ASSERT_EQ(run("synth --kind linear_subspace --intrinsic-dim " + std::to_string(i + 2) +
                  " --ambient-dim 24 --n 150 --layers 3 --model toy --seed " +
                  std::to_string(i) + " --dataset " + p("d/" + by_kb[i].second) +
                  " --out " + p("s/" + stem)).code, 0);
    ASSERT_EQ(run("estimate --manifest " + p("s/" + stem + "/manifest.json") +
                  " --estimator pca --estimator pr --out " + p("e")).code, 0);
  }
  const CliResult r = run("correlate " + p("kc") + " " + p("e") + " --svg --out " + p("a"));
  ASSERT_EQ(r.code, 0) << r.err;
  const auto report = json(path("a/analysis.json"));
  EXPECT_EQ(report["kind"], "analysis_report");
  EXPECT_EQ(report["inputs"].size(), 8u + 8u * 3u * 2u);
  std::size_t mean_rows = 0;
  for (const auto& c : report["correlations"]) {
    if (c["granularity"] == "mean_layers") ++mean_rows;
    if (c["estimator"] == "pca") {
      EXPECT_DOUBLE_EQ(c["rho"].get<double>(), 1.0);
    }
  }
  EXPECT_EQ(mean_rows, 2u);
  const std::string table = dimscope::read_file(path("a/table_mean_layers.csv"));
  EXPECT_EQ(table.rfind("spearman_rho,toy\npca,1.00*\npr,", 0), 0u) << table;
  EXPECT_EQ(line_count(path("a/table_per_layer.csv")), 3u);
  EXPECT_TRUE(fs::exists(path("a/toy.pca.layers.svg")));
  EXPECT_FALSE(report["deltas"].empty());
}

TEST_F(Cli, CorrelateNeedsThreeConfigs) {
  ASSERT_EQ(run("generate --grammar len5 --k 1 --k 2 --mode coherent --splits 1 --n 50 --out " +
                p("d")).code, 0);
  ASSERT_EQ(run("kc " + p("d") + "/*.jsonl --out " + p("kc")).code, 0);
  for (const std::string stem : {"len5_k1_coherent_s0", "len5_k2_coherent_s0"}) {
    ASSERT_EQ(run("synth --intrinsic-dim 2 --ambient-dim 4 --n 50 --dataset " +
                  p("d/" + stem + ".jsonl") + " --out " + p("s/" + stem)).code, 0);
    ASSERT_EQ(run("estimate --manifest " + p("s/" + stem + "/manifest.json") +
                  " --estimator pca --out " + p("e")).code, 0);
  }
  const CliResult r = run("correlate " + p("kc") + " " + p("e") + " --out " + p("a"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("at least 3"), std::string::npos) << r.err;
}

TEST_F(Cli, CorrelateRejectsMisalignedEstimate) {
  ASSERT_EQ(run("generate --grammar len5 --k 1 --mode coherent --splits 3 --n 50 --out " +
                p("d")).code, 0);
  ASSERT_EQ(run("kc " + p("d/len5_k1_coherent_s0.jsonl") + " " +
                p("d/len5_k1_coherent_s1.jsonl") + " --out " + p("kc")).code, 0);
  ASSERT_EQ(run("synth --intrinsic-dim 2 --ambient-dim 4 --n 50 --dataset " +
                p("d/len5_k1_coherent_s2.jsonl") + " --out " + p("s")).code, 0);
  ASSERT_EQ(run("estimate --manifest " + p("s/manifest.json") + " --out " + p("e")).code, 0);
  const CliResult r = run("correlate " + p("kc") + " " + p("e") + " --out " + p("a"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("misaligned"), std::string::npos) << r.err;
}
