#include "dimscope/complexity.hpp"

#include <cstring>
#include <string>

#include <zlib.h>

#include "dimscope/error.hpp"

namespace dimscope {

std::string serialize_corpus(std::span<const std::string> sequences) {
  std::size_t bytes = 0;
  for (const std::string& s : sequences) bytes += s.size() + 1;
  std::string out;
  out.reserve(bytes);
  for (const std::string& s : sequences) {
    out += s;
    out.push_back('\n');
  }
  return out;
}

std::vector<unsigned char> gzip_compress(std::string_view data, int level) {
  if (level < 1 || level > 9) {
    throw Error(ErrorKind::InvalidParameter,
                "gzip level must lie in [1, 9], got " + std::to_string(level));
  }
  z_stream stream;
  std::memset(&stream, 0, sizeof(stream));
  // windowBits 15 + 16 selects the gzip wrapper; zlib writes MTIME = 0.
  if (deflateInit2(&stream, level, Z_DEFLATED, 15 + 16, 8,
                   Z_DEFAULT_STRATEGY) != Z_OK) {
    throw Error(ErrorKind::Io, "deflateInit2 failed");
  }
  std::vector<unsigned char> out(deflateBound(&stream, data.size()) + 32);
  stream.next_in =
      reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
  stream.avail_in = static_cast<uInt>(data.size());
  stream.next_out = out.data();
  stream.avail_out = static_cast<uInt>(out.size());
  const int rc = deflate(&stream, Z_FINISH);
  const std::size_t produced = stream.total_out;
  deflateEnd(&stream);
  if (rc != Z_STREAM_END) {
    throw Error(ErrorKind::Io, "deflate did not finish");
  }
  out.resize(produced);
  return out;
}

KCReport estimate_kc(std::span<const std::string> sequences, int level) {
  if (sequences.empty()) {
    throw Error(ErrorKind::InvalidInput, "cannot compress an empty dataset");
  }
  const std::string corpus = serialize_corpus(sequences);
  const std::vector<unsigned char> packed = gzip_compress(corpus, level);

  KCReport report;
  report.raw_bytes = corpus.size();
  report.compressed_bytes = packed.size();
  report.compressed_kb = static_cast<double>(packed.size()) / 1000.0;
  report.compressor = "gzip/zlib";
  report.compressor_version = zlibVersion();
  report.level = level;
  report.serialization = std::string(kCorpusSerialization);
  return report;
}

KCReport estimate_kc(const Dataset& dataset, int level) {
  return estimate_kc(dataset.sequences, level);
}

}  // namespace dimscope
