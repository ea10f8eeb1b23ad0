#pragma once

#include <string>
#include <vector>

namespace dimscope {

struct ChartSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  bool dashed = false;
};

/// Minimal standalone SVG line chart with axes, ticks and a legend.
std::string render_line_chart(const std::string& title,
                              const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<ChartSeries>& series);

}  // namespace dimscope
