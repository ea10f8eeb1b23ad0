#include <gtest/gtest.h>

#include <zlib.h>

#include "dimscope/complexity.hpp"
#include "dimscope/dataset.hpp"
#include "dimscope/error.hpp"
#include "support.hpp"

using namespace dimscope;
using dimscope::testing::grammar;

namespace {

std::string gunzip(const std::vector<unsigned char>& data) {
  z_stream zs{};
  EXPECT_EQ(inflateInit2(&zs, 31), Z_OK);
  zs.next_in = const_cast<unsigned char*>(data.data());
  zs.avail_in = static_cast<uInt>(data.size());
  std::string out;
  char buf[16384];
  int rc = Z_OK;
  while (rc != Z_STREAM_END) {
    zs.next_out = reinterpret_cast<unsigned char*>(buf);
    zs.avail_out = sizeof(buf);
    rc = inflate(&zs, Z_NO_FLUSH);
    EXPECT_TRUE(rc == Z_OK || rc == Z_STREAM_END);
    if (rc != Z_OK && rc != Z_STREAM_END) break;
    out.append(buf, sizeof(buf) - zs.avail_out);
  }
  inflateEnd(&zs);
  return out;
}

Dataset sample(const std::string& name, std::size_t k, std::size_t n,
               std::uint64_t split = 0) {
  const GrammarSpec g = grammar(name);
  DatasetConfig c;
  c.grammar = name;
  c.k = k;
  c.n_sequences = n;
  c.seed = 2024;
  c.split_id = split;
  return sample_dataset(g, c);
}

}  // namespace

TEST(Complexity, SerializationIsLfTerminatedText) {
  const std::vector<std::string> seqs = {"a b", "c"};
  EXPECT_EQ(serialize_corpus(seqs), "a b\nc\n");
}

TEST(Complexity, GzipStreamIsValidAndTimestampFree) {
  const std::string text = "The lawyer feeds the cat .\nThe cat feeds the lawyer .\n";
  const auto gz = gzip_compress(text, 6);
  ASSERT_GE(gz.size(), 18u);
  EXPECT_EQ(gz[0], 0x1f);
  EXPECT_EQ(gz[1], 0x8b);
  for (int i = 4; i < 8; ++i) EXPECT_EQ(gz[i], 0);
  EXPECT_EQ(gunzip(gz), text);
}

TEST(Complexity, ReportFields) {
  const std::vector<std::string> seqs(100, "The lawyer feeds the cat .");
  const KCReport r = estimate_kc(seqs);
  EXPECT_EQ(r.raw_bytes, 2700u);
  EXPECT_DOUBLE_EQ(r.compressed_kb, static_cast<double>(r.compressed_bytes) / 1000.0);
  EXPECT_EQ(r.level, 6);
  EXPECT_EQ(r.compressor, "gzip/zlib");
  EXPECT_EQ(r.compressor_version, zlibVersion());
  EXPECT_EQ(r.serialization, "text-lf-v1");
}

TEST(Complexity, RepetitionCompressesBetter) {
  const Dataset distinct = sample("len17", 1, 10000);
  const std::vector<std::string> copies(10000, distinct.sequences[0]);
  EXPECT_LT(estimate_kc(copies).compressed_bytes,
            estimate_kc(distinct).compressed_bytes);
}

TEST(Complexity, CouplingOrdersCompressedSize) {
  double previous = 1e300;
  for (std::size_t k = 1; k <= 4; ++k) {
    const Dataset coherent = sample("len17", k, 10000);
    const double kb = estimate_kc(coherent).compressed_kb;
    EXPECT_LT(kb, previous) << "k=" << k;
    previous = kb;
    EXPECT_GT(estimate_kc(shuffle_dataset(coherent, 2024)).compressed_kb, kb);
  }
}

TEST(Complexity, ErrorsAndDeterminism) {
  EXPECT_THROW(estimate_kc(std::vector<std::string>{}), Error);
  EXPECT_THROW(gzip_compress("x", 0), Error);
  EXPECT_THROW(gzip_compress("x", 10), Error);
  const Dataset d = sample("len8", 2, 500);
  EXPECT_EQ(estimate_kc(d).compressed_bytes, estimate_kc(d).compressed_bytes);
  EXPECT_LE(estimate_kc(d, 9).compressed_bytes, estimate_kc(d, 1).compressed_bytes);
}
