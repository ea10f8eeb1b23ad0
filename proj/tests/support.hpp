#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "dimscope/grammar.hpp"
#include "dimscope/representation.hpp"
#include "dimscope/rng.hpp"

namespace dimscope::testing {

inline std::filesystem::path grammar_dir() { return DIMSCOPE_TEST_GRAMMAR_DIR; }

inline GrammarSpec grammar(const std::string& name) {
  return load_grammar_file(grammar_dir() / (name + ".json"));
}

inline PointMatrix gaussian_matrix(std::size_t rows, std::size_t cols,
                                   std::uint64_t seed) {
  Rng rng(seed);
  PointMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.normal();
  }
  return m;
}

/// Brute-force k nearest distinct positions of row q, by (distance, index).
/// Rows bitwise equal to row q, and all but the first row of any group of
/// identical rows, are skipped.
inline std::vector<std::pair<double, std::size_t>> brute_knn(
    const PointMatrix& m, std::size_t q, std::size_t k) {
  std::vector<std::pair<double, std::size_t>> all;
  for (std::size_t j = 0; j < static_cast<std::size_t>(m.rows()); ++j) {
    bool shadowed = (m.row(j) == m.row(q));
    for (std::size_t p = 0; p < j && !shadowed; ++p) {
      shadowed = (m.row(p) == m.row(j));
    }
    if (shadowed) continue;
    double s = 0.0;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const double d = m(q, c) - m(j, c);
      s += d * d;
    }
    all.emplace_back(std::sqrt(s), j);
  }
  std::sort(all.begin(), all.end());
  all.resize(std::min(k, all.size()));
  return all;
}

/// O(n^2) average ranks: 1 + #smaller + (#equal - 1) / 2.
inline std::vector<double> brute_ranks(const std::vector<double>& v) {
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    double less = 0.0;
    double equal = 0.0;
    for (const double w : v) {
      if (w < v[i]) less += 1.0;
      if (w == v[i]) equal += 1.0;
    }
    r[i] = 1.0 + less + (equal - 1.0) / 2.0;
  }
  return r;
}

inline double brute_pearson(const std::vector<double>& x,
                            const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace dimscope::testing
