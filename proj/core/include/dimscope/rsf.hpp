#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "dimscope/representation.hpp"

namespace dimscope {

/// RSF matrix container:
///   offset 0   "RSF1"
///   offset 4   u32 version (= 1), little-endian
///   offset 8   u64 n_rows
///   offset 16  u64 n_cols
///   offset 24  n_rows * n_cols IEEE-754 float32, row-major, little-endian
inline constexpr std::uint32_t kRsfVersion = 1;
inline constexpr std::size_t kRsfHeaderBytes = 24;

std::string encode_rsf(const PointMatrix& matrix);

/// Throws Format naming the byte offset of the first problem.
PointMatrix decode_rsf(std::string_view bytes);

PointMatrix read_rsf(const std::filesystem::path& path);
void write_rsf(const std::filesystem::path& path, const PointMatrix& matrix);

}  // namespace dimscope
