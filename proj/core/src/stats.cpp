#include "dimscope/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <boost/math/distributions/students_t.hpp>

#include "dimscope/error.hpp"

namespace dimscope {
namespace {

void require_pairs(std::span<const double> x, std::span<const double> y,
                   std::size_t min_n) {
  if (x.size() != y.size()) {
    throw Error(ErrorKind::InvalidInput,
                "length mismatch: " + std::to_string(x.size()) + " vs " +
                    std::to_string(y.size()));
  }
  if (x.size() < min_n) {
    throw Error(ErrorKind::InvalidInput,
                "need at least " + std::to_string(min_n) + " pairs, got " +
                    std::to_string(x.size()));
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i])) {
      throw Error(ErrorKind::InvalidInput, "non-finite sample");
    }
  }
}

double mean(std::span<const double> v) {
  double s = 0.0;
  for (const double a : v) s += a;
  return s / static_cast<double>(v.size());
}

double factorial(std::size_t n) {
  double f = 1.0;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<double>(i);
  return f;
}

}  // namespace

std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    while (j < n && values[order[j]] == values[order[i]]) ++j;
    // Positions i..j-1 hold ranks i+1..j; ties share their mean.
    const double shared = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t t = i; t < j; ++t) ranks[order[t]] = shared;
    i = j;
  }
  return ranks;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  require_pairs(x, y, 2);
  const double mx = mean(x);
  const double my = mean(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw Error(ErrorKind::UndefinedCorrelation,
                "correlation undefined for a constant vector");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double student_t_two_sided(double t, double degrees_of_freedom) {
  if (std::isnan(t)) return 1.0;
  if (std::isinf(t)) return 0.0;
  const boost::math::students_t dist(degrees_of_freedom);
  return std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(
                                 dist, std::abs(t))));
}

CorrelationResult spearman(std::span<const double> x, std::span<const double> y,
                           PValueMethod method) {
  require_pairs(x, y, 3);
  const std::vector<double> rx = average_ranks(x);
  const std::vector<double> ry = average_ranks(y);

  CorrelationResult out;
  out.n = x.size();
  out.p_method = method;
  out.rho = pearson(rx, ry);
  const double n = static_cast<double>(out.n);

  if (method == PValueMethod::ExactPermutation) {
    if (out.n > 10) {
      throw Error(ErrorKind::InvalidParameter,
                  "exact permutation p-values are limited to n <= 10");
    }
    std::vector<double> perm = ry;
    std::sort(perm.begin(), perm.end());
    std::size_t extreme = 0;
    std::size_t total = 0;
    const double threshold = std::abs(out.rho) - 1e-12;
    do {
      ++total;
      if (std::abs(pearson(rx, perm)) >= threshold) ++extreme;
    } while (std::next_permutation(perm.begin(), perm.end()));
    // Each distinct arrangement of tied ranks stands for the same number of
    // raw permutations, so unweighted counting is exact.
    out.p_value = static_cast<double>(extreme) / static_cast<double>(total);
    return out;
  }

  if (1.0 - std::abs(out.rho) < 1e-15) {
    out.p_value = std::min(1.0, 2.0 / factorial(out.n));
  } else {
    const double t = out.rho * std::sqrt((n - 2.0) / (1.0 - out.rho * out.rho));
    out.p_value = student_t_two_sided(t, n - 2.0);
  }
  return out;
}

RegressionResult linear_regression(std::span<const double> x,
                                   std::span<const double> y) {
  require_pairs(x, y, 3);
  const double mx = mean(x);
  const double my = mean(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0) {
    throw Error(ErrorKind::DegenerateDesign,
                "all regressor values are equal");
  }

  RegressionResult out;
  out.n = x.size();
  out.alpha = sxy / sxx;
  out.intercept = my - out.alpha * mx;
  out.r_value = syy == 0.0 ? 0.0 : std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);

  const double df = static_cast<double>(out.n) - 2.0;
  const double ss_res = std::max(0.0, syy - out.alpha * sxy);
  out.slope_stderr = std::sqrt(ss_res / df / sxx);
  if (out.slope_stderr == 0.0) {
    out.p_value = out.alpha == 0.0 ? 1.0 : 0.0;
  } else {
    out.p_value = student_t_two_sided(out.alpha / out.slope_stderr, df);
  }
  return out;
}

std::string significance_marker(double p_value) {
  if (p_value < 0.05) return "*";
  if (p_value < 0.1) return "†";
  return "";
}

}  // namespace dimscope
