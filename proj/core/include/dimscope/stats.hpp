#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace dimscope {

/// 1-based ranks; tied values share the mean of the ranks they span.
std::vector<double> average_ranks(std::span<const double> values);

double pearson(std::span<const double> x, std::span<const double> y);

enum class PValueMethod {
  /// Student t with n - 2 degrees of freedom on t = rho sqrt((n-2)/(1-rho^2)).
  /// Perfect correlations get 2/n!, the chance of a perfect ordering either
  /// way under exchangeability.
  TApproximation,
  /// Share of all n! orderings of y at least as extreme; n <= 10 only.
  ExactPermutation,
};

struct CorrelationResult {
  double rho = 0.0;
  double p_value = 1.0;
  std::size_t n = 0;
  std::string method = "spearman";
  PValueMethod p_method = PValueMethod::TApproximation;
};

/// Tie-corrected Spearman correlation (Pearson correlation of average ranks).
CorrelationResult spearman(std::span<const double> x, std::span<const double> y,
                           PValueMethod method = PValueMethod::TApproximation);

struct RegressionResult {
  double alpha = 0.0;
  double intercept = 0.0;
  double r_value = 0.0;
  double p_value = 1.0;
  double slope_stderr = 0.0;
  std::size_t n = 0;
};

/// Ordinary least squares y = alpha x + intercept with a two-sided t-test on
/// the slope.
RegressionResult linear_regression(std::span<const double> x,
                                   std::span<const double> y);

/// Two-sided tail probability of Student's t.
double student_t_two_sided(double t, double degrees_of_freedom);

/// "*" below 0.05, "†" below 0.1, otherwise empty.
std::string significance_marker(double p_value);

}  // namespace dimscope
