#include "svg_report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

namespace epifair::cli {
namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 150.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 50.0;

const char* kPalette[] = {"#e6851f", "#bf40a6", "#0066cc",
                          "#2c9e4b", "#d62728", "#7f7f7f"};

std::string fmt(double v) {
  std::ostringstream out;
  out << std::setprecision(6) << v;
  return out.str();
}

}  // namespace

void write_svg_chart(std::ostream& out, const std::string& title,
                     const std::vector<ChartSeries>& series) {
  std::size_t steps = 0;
  double y_min = std::numeric_limits<double>::infinity();
  double y_max = -std::numeric_limits<double>::infinity();
  for (const auto& s : series) {
    steps = std::max(steps, s.median.size());
    for (std::size_t t = 0; t < s.median.size(); ++t) {
      for (double v : {s.median[t], s.draw_band ? s.q1[t] : s.median[t],
                       s.draw_band ? s.q3[t] : s.median[t]}) {
        if (std::isfinite(v)) {
          y_min = std::min(y_min, v);
          y_max = std::max(y_max, v);
        }
      }
    }
  }
  if (steps < 2 || !std::isfinite(y_min)) {
    y_min = 0.0;
    y_max = 1.0;
    steps = std::max<std::size_t>(steps, 2);
  }
  if (y_max - y_min < 1e-12) {
    y_min -= 0.5;
    y_max += 0.5;
  }
  const double pad = 0.05 * (y_max - y_min);
  y_min -= pad;
  y_max += pad;

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const auto x_of = [&](std::size_t t) {
    return kMarginLeft + plot_w * static_cast<double>(t) /
                             static_cast<double>(steps - 1);
  };
  const auto y_of = [&](double v) {
    return kMarginTop + plot_h * (1.0 - (v - y_min) / (y_max - y_min));
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
      << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kMarginLeft << "\" y=\"24\" font-family=\"sans-serif\""
      << " font-size=\"16\">" << title << "</text>\n";

  // axes and ticks
  out << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop + plot_h
      << "\" x2=\"" << kMarginLeft + plot_w << "\" y2=\"" << kMarginTop + plot_h
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop << "\" x2=\""
      << kMarginLeft << "\" y2=\"" << kMarginTop + plot_h
      << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double v = y_min + (y_max - y_min) * i / 5.0;
    const double y = y_of(v);
    out << "<line x1=\"" << kMarginLeft - 4 << "\" y1=\"" << y << "\" x2=\""
        << kMarginLeft << "\" y2=\"" << y << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << kMarginLeft - 8 << "\" y=\"" << y + 4
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << fmt(v) << "</text>\n";
    const std::size_t t = steps > 1 ? (steps - 1) * i / 5 : 0;
    const double x = x_of(t);
    out << "<line x1=\"" << x << "\" y1=\"" << kMarginTop + plot_h << "\" x2=\""
        << x << "\" y2=\"" << kMarginTop + plot_h + 4
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << x << "\" y=\"" << kMarginTop + plot_h + 18
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\""
        << " font-size=\"11\">" << t << "</text>\n";
  }
  out << "<text x=\"" << kMarginLeft + plot_w / 2 << "\" y=\""
      << kHeight - 12
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\""
      << " font-size=\"12\">t</text>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const auto& line = series[s];
    const char* color = kPalette[s % std::size(kPalette)];
    if (line.draw_band) {
      std::ostringstream points;
      bool any = false;
      for (std::size_t t = 0; t < line.q3.size(); ++t)
        if (std::isfinite(line.q3[t])) {
          points << x_of(t) << "," << y_of(line.q3[t]) << " ";
          any = true;
        }
      for (std::size_t t = line.q1.size(); t-- > 0;)
        if (std::isfinite(line.q1[t]))
          points << x_of(t) << "," << y_of(line.q1[t]) << " ";
      if (any)
        out << "<polygon points=\"" << points.str() << "\" fill=\"" << color
            << "\" fill-opacity=\"0.15\" stroke=\"none\"/>\n";
    }
    std::ostringstream points;
    for (std::size_t t = 0; t < line.median.size(); ++t)
      if (std::isfinite(line.median[t]))
        points << x_of(t) << "," << y_of(line.median[t]) << " ";
    out << "<polyline points=\"" << points.str() << "\" fill=\"none\""
        << " stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    const double ly = kMarginTop + 16.0 * static_cast<double>(s);
    out << "<line x1=\"" << kMarginLeft + plot_w + 10 << "\" y1=\"" << ly
        << "\" x2=\"" << kMarginLeft + plot_w + 34 << "\" y2=\"" << ly
        << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << kMarginLeft + plot_w + 40 << "\" y=\"" << ly + 4
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << line.label
        << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace epifair::cli
