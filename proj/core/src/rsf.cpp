#include "dimscope/rsf.hpp"

#include <bit>
#include <cstring>
#include <limits>

#include "dimscope/error.hpp"
#include "dimscope/fileio.hpp"

namespace dimscope {
namespace {

constexpr char kMagic[4] = {'R', 'S', 'F', '1'};

template <typename T>
void put_le(std::string& out, T value) {
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    out.push_back(static_cast<char>((value >> (8 * i)) & 0xff));
  }
}

template <typename T>
T get_le(std::string_view bytes, std::size_t offset) {
  T value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    value |= static_cast<T>(static_cast<unsigned char>(bytes[offset + i]))
             << (8 * i);
  }
  return value;
}

[[noreturn]] void format_error(std::size_t offset, const std::string& what) {
  throw Error(ErrorKind::Format,
              "RSF format error at byte offset " + std::to_string(offset) +
                  ": " + what);
}

}  // namespace

std::string encode_rsf(const PointMatrix& matrix) {
  const auto rows = static_cast<std::uint64_t>(matrix.rows());
  const auto cols = static_cast<std::uint64_t>(matrix.cols());
  std::string out;
  out.reserve(kRsfHeaderBytes + rows * cols * 4);
  out.append(kMagic, 4);
  put_le<std::uint32_t>(out, kRsfVersion);
  put_le<std::uint64_t>(out, rows);
  put_le<std::uint64_t>(out, cols);
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      put_le<std::uint32_t>(
          out, std::bit_cast<std::uint32_t>(static_cast<float>(matrix(i, j))));
    }
  }
  return out;
}

PointMatrix decode_rsf(std::string_view bytes) {
  if (bytes.size() < 4) format_error(bytes.size(), "file ends inside the magic");
  if (std::memcmp(bytes.data(), kMagic, 4) != 0) {
    format_error(0, "bad magic, expected \"RSF1\"");
  }
  if (bytes.size() < 8) format_error(bytes.size(), "file ends inside the version");
  const auto version = get_le<std::uint32_t>(bytes, 4);
  if (version != kRsfVersion) {
    format_error(4, "unsupported version " + std::to_string(version));
  }
  if (bytes.size() < kRsfHeaderBytes) {
    format_error(bytes.size(), "file ends inside the shape header");
  }
  const auto rows = get_le<std::uint64_t>(bytes, 8);
  const auto cols = get_le<std::uint64_t>(bytes, 16);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (cols != 0 && rows > (kMax - kRsfHeaderBytes) / 4 / cols) {
    format_error(8, "shape overflows");
  }
  const std::uint64_t expected = kRsfHeaderBytes + rows * cols * 4;
  if (bytes.size() < expected) {
    format_error(bytes.size(), "truncated payload, expected " +
                                   std::to_string(expected) + " bytes total");
  }
  if (bytes.size() > expected) {
    format_error(expected, "trailing bytes after payload");
  }

  PointMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  std::size_t offset = kRsfHeaderBytes;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      m(i, j) = std::bit_cast<float>(get_le<std::uint32_t>(bytes, offset));
      offset += 4;
    }
  }
  return m;
}

PointMatrix read_rsf(const std::filesystem::path& path) {
  return decode_rsf(read_file(path));
}

void write_rsf(const std::filesystem::path& path, const PointMatrix& matrix) {
  write_file_atomic(path, encode_rsf(matrix));
}

}  // namespace dimscope
