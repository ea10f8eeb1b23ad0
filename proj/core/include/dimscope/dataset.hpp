#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dimscope/grammar.hpp"

namespace dimscope {

enum class Mode { Coherent, Shuffled };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view name);

struct DatasetConfig {
  std::string grammar;
  std::size_t k = 1;
  Mode mode = Mode::Coherent;
  std::size_t n_sequences = 0;
  std::uint64_t seed = 0;
  std::uint64_t split_id = 0;
};

struct Dataset {
  std::vector<std::string> sequences;
  DatasetConfig config;
  /// Per sequence, the vocabulary index used at each variable slot.
  std::vector<std::vector<std::uint16_t>> index_trace;
  /// Sizes of the contiguous coupling groups over the variable slots.
  std::vector<std::size_t> groups;
};

/// Partitions l variable slots into contiguous groups of k; the trailing group
/// is smaller when k does not divide l.
std::vector<std::size_t> coupling_groups(std::size_t l, std::size_t k);

/// Coherent k-coupled sampling. Sequence i draws from the stream
/// derive_seed(seed, {split_id, i}); one uniform index per coupling group, in
/// group order, is shared by every slot of the group.
Dataset sample_dataset(const GrammarSpec& grammar, const DatasetConfig& config);

/// Uniform per-sequence permutation of all whitespace tokens. Sequence i uses
/// the stream derive_seed(seed, {split_id, i, kShuffleStreamTag}).
Dataset shuffle_dataset(const Dataset& dataset, std::uint64_t seed);

inline constexpr std::uint64_t kShuffleStreamTag = 0x73687566666c65ULL;

using UnigramHistogram = std::map<std::string, std::size_t, std::less<>>;

UnigramHistogram unigram_histogram(std::span<const std::string> sequences);
UnigramHistogram unigram_histogram(const Dataset& dataset);

/// Total-variation distance between the normalized histograms.
double total_variation(const UnigramHistogram& a, const UnigramHistogram& b);

/// One JSON record per line: idx, text, k, mode, grammar, seed, split.
void write_jsonl(const Dataset& dataset, std::ostream& out);
std::string to_jsonl(const Dataset& dataset);

/// Reads records back in file order. index_trace is left empty. Plain
/// {"text": ...} records are accepted; missing fields default.
Dataset read_jsonl(std::istream& in);

}  // namespace dimscope
