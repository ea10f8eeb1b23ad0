#include "dimscope/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "dimscope/error.hpp"
#include "dimscope/rng.hpp"

namespace dimscope {

std::string_view to_string(Mode mode) {
  return mode == Mode::Coherent ? "coherent" : "shuffled";
}

Mode parse_mode(std::string_view name) {
  if (name == "coherent") return Mode::Coherent;
  if (name == "shuffled") return Mode::Shuffled;
  throw Error(ErrorKind::InvalidParameter,
              "unknown mode '" + std::string(name) + "'");
}

std::vector<std::size_t> coupling_groups(std::size_t l, std::size_t k) {
  if (k == 0 || k > l) {
    throw Error(ErrorKind::InvalidParameter,
                "coupling factor k=" + std::to_string(k) +
                    " must lie in [1, " + std::to_string(l) + "]");
  }
  std::vector<std::size_t> groups;
  for (std::size_t start = 0; start < l; start += k) {
    groups.push_back(std::min(k, l - start));
  }
  return groups;
}

Dataset sample_dataset(const GrammarSpec& grammar, const DatasetConfig& config) {
  if (config.mode != Mode::Coherent) {
    throw Error(ErrorKind::InvalidParameter,
                "sampling produces coherent datasets; shuffle afterwards");
  }
  const std::size_t l = grammar.variable_count();
  Dataset out;
  out.config = config;
  out.config.grammar = grammar.name();
  out.groups = coupling_groups(l, config.k);
  out.sequences.reserve(config.n_sequences);
  out.index_trace.reserve(config.n_sequences);

  for (std::size_t i = 0; i < config.n_sequences; ++i) {
    Rng rng(derive_seed(config.seed, {config.split_id, i}));
    std::vector<std::uint16_t> indices(l);
    std::size_t pos = 0;
    for (const std::size_t size : out.groups) {
      const auto j = static_cast<std::uint16_t>(rng.below(kVocabularySize));
      std::fill_n(indices.begin() + static_cast<std::ptrdiff_t>(pos), size, j);
      pos += size;
    }
    out.sequences.push_back(grammar.render(indices));
    out.index_trace.push_back(std::move(indices));
  }
  return out;
}

Dataset shuffle_dataset(const Dataset& dataset, std::uint64_t seed) {
  if (dataset.config.mode != Mode::Coherent) {
    throw Error(ErrorKind::InvalidInput, "dataset is already shuffled");
  }
  Dataset out = dataset;
  out.config.mode = Mode::Shuffled;
  out.config.seed = dataset.config.seed;
  for (std::size_t i = 0; i < out.sequences.size(); ++i) {
    Rng rng(derive_seed(seed, {dataset.config.split_id, i, kShuffleStreamTag}));
    std::vector<std::string> words = split_whitespace(out.sequences[i]);
    // Fisher-Yates, top down.
    for (std::size_t j = words.size(); j > 1; --j) {
      const std::size_t swap_with = rng.below(j);
      std::swap(words[j - 1], words[swap_with]);
    }
    std::string joined;
    for (std::size_t w = 0; w < words.size(); ++w) {
      if (w > 0) joined.push_back(' ');
      joined += words[w];
    }
    out.sequences[i] = std::move(joined);
  }
  return out;
}

UnigramHistogram unigram_histogram(std::span<const std::string> sequences) {
  UnigramHistogram hist;
  for (const std::string& s : sequences) {
    for (std::string& w : split_whitespace(s)) ++hist[std::move(w)];
  }
  return hist;
}

UnigramHistogram unigram_histogram(const Dataset& dataset) {
  return unigram_histogram(dataset.sequences);
}

double total_variation(const UnigramHistogram& a, const UnigramHistogram& b) {
  double total_a = 0.0;
  double total_b = 0.0;
  for (const auto& [w, c] : a) total_a += static_cast<double>(c);
  for (const auto& [w, c] : b) total_b += static_cast<double>(c);
  if (total_a == 0.0 || total_b == 0.0) {
    throw Error(ErrorKind::InvalidInput, "empty histogram");
  }
  double sum = 0.0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      sum += static_cast<double>(ia->second) / total_a;
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      sum += static_cast<double>(ib->second) / total_b;
      ++ib;
    } else {
      sum += std::abs(static_cast<double>(ia->second) / total_a -
                      static_cast<double>(ib->second) / total_b);
      ++ia;
      ++ib;
    }
  }
  return 0.5 * sum;
}

void write_jsonl(const Dataset& dataset, std::ostream& out) {
  const DatasetConfig& c = dataset.config;
  for (std::size_t i = 0; i < dataset.sequences.size(); ++i) {
    nlohmann::ordered_json rec;
    rec["idx"] = i;
    rec["text"] = dataset.sequences[i];
    rec["k"] = c.k;
    rec["mode"] = std::string(to_string(c.mode));
    rec["grammar"] = c.grammar;
    rec["seed"] = c.seed;
    rec["split"] = c.split_id;
    out << rec.dump() << '\n';
  }
}

std::string to_jsonl(const Dataset& dataset) {
  std::ostringstream os;
  write_jsonl(dataset, os);
  return os.str();
}

Dataset read_jsonl(std::istream& in) {
  Dataset out;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(line);
      if (!rec.is_object() || !rec.contains("text") || !rec["text"].is_string()) {
        throw Error(ErrorKind::Format, "record lacks a string 'text' field");
      }
      if (first) {
        out.config.grammar = rec.value("grammar", std::string());
        out.config.k = rec.value("k", std::size_t{1});
        out.config.mode = parse_mode(rec.value("mode", std::string("coherent")));
        out.config.seed = rec.value("seed", std::uint64_t{0});
        out.config.split_id = rec.value("split", std::uint64_t{0});
        first = false;
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::Format, "JSONL line " + std::to_string(line_no) +
                                         ": " + e.what());
    } catch (const Error& e) {
      throw Error(ErrorKind::Format, "JSONL line " + std::to_string(line_no) +
                                         ": " + e.what());
    }
    out.sequences.push_back(rec["text"].get<std::string>());
  }
  out.config.n_sequences = out.sequences.size();
  return out;
}

}  // namespace dimscope
