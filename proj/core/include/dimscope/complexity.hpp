#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dimscope/dataset.hpp"

namespace dimscope {

inline constexpr int kDefaultGzipLevel = 6;
inline constexpr std::string_view kCorpusSerialization = "text-lf-v1";

/// Compressed-size proxy for the Kolmogorov complexity of a corpus.
/// compressed_kb uses 1 KB = 1000 bytes.
struct KCReport {
  std::size_t raw_bytes = 0;
  std::size_t compressed_bytes = 0;
  double compressed_kb = 0.0;
  std::string compressor;
  std::string compressor_version;
  int level = kDefaultGzipLevel;
  std::string serialization;
};

/// Sequences in order, each terminated by a single LF. No metadata.
std::string serialize_corpus(std::span<const std::string> sequences);

/// Single-member gzip stream (RFC 1952) with a zeroed header timestamp.
std::vector<unsigned char> gzip_compress(std::string_view data, int level);

KCReport estimate_kc(std::span<const std::string> sequences,
                     int level = kDefaultGzipLevel);
KCReport estimate_kc(const Dataset& dataset, int level = kDefaultGzipLevel);

}  // namespace dimscope
