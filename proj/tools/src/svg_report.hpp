#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "epifair/audit.hpp"

namespace epifair::cli {

/// One line on a chart: a seed-median series with its interquartile band.
struct ChartSeries {
  std::string label;
  std::vector<double> median;  // indexed by t; NaN gaps are skipped
  std::vector<double> q1;
  std::vector<double> q3;
  bool draw_band = false;
};

/// Static SVG line chart: x axis is the time step, one line per series.
void write_svg_chart(std::ostream& out, const std::string& title,
                     const std::vector<ChartSeries>& series);

}  // namespace epifair::cli
