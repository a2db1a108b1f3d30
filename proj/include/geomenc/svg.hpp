#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "geomenc/errors.hpp"
#include "geomenc/num_format.hpp"

namespace geomenc {

struct ChartSeries {
  std::string name;
  std::vector<double> values;  // one per category
};

// Grouped bar chart (metric per category, one bar group per category, one
// color per series). Plain hand-rolled SVG so chart output stays diffable.
inline std::string bar_chart_svg(const std::string& title,
                                 const std::vector<std::string>& categories,
                                 const std::vector<ChartSeries>& series,
                                 double y_min = 0, double y_max = 1,
                                 const std::string& y_label = "") {
  for (const ChartSeries& s : series)
    if (s.values.size() != categories.size())
      throw_error(ErrorCode::argument, "chart series length mismatch");
  const double width = 640, height = 400;
  const double left = 64, right = 16, top = 40, bottom = 56;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;
  static const char* kColors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728"};

  auto y_px = [&](double v) {
    double t = (v - y_min) / (y_max - y_min);
    t = std::clamp(t, 0.0, 1.0);
    return top + plot_h * (1.0 - t);
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         format_double(width) + "\" height=\"" + format_double(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + format_double(width / 2) +
         "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"15\">" +
         title + "</text>\n";

  // Horizontal gridlines and axis labels.
  int n_ticks = 5;
  for (int i = 0; i <= n_ticks; ++i) {
    double v = y_min + (y_max - y_min) * i / n_ticks;
    double y = y_px(v);
    svg += "<line x1=\"" + format_double(left) + "\" y1=\"" + format_double(y) +
           "\" x2=\"" + format_double(width - right) + "\" y2=\"" +
           format_double(y) + "\" stroke=\"#dddddd\"/>\n";
    svg += "<text x=\"" + format_double(left - 6) + "\" y=\"" +
           format_double(y + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
           format_double(v) + "</text>\n";
  }
  if (!y_label.empty()) {
    svg += "<text x=\"14\" y=\"" + format_double(top + plot_h / 2) +
           "\" transform=\"rotate(-90 14 " + format_double(top + plot_h / 2) +
           ")\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"12\">" +
           y_label + "</text>\n";
  }

  const std::size_t n_cat = categories.size();
  const std::size_t n_series = series.size();
  double group_w = plot_w / static_cast<double>(n_cat);
  double bar_w = group_w * 0.8 / static_cast<double>(std::max<std::size_t>(n_series, 1));
  for (std::size_t c = 0; c < n_cat; ++c) {
    double group_x = left + group_w * static_cast<double>(c) + group_w * 0.1;
    for (std::size_t s = 0; s < n_series; ++s) {
      double v = series[s].values[c];
      double y = y_px(v);
      double base = y_px(std::max(y_min, 0.0));
      double bar_top = std::min(y, base);
      double bar_h = std::abs(base - y);
      svg += "<rect x=\"" + format_double(group_x + bar_w * static_cast<double>(s)) +
             "\" y=\"" + format_double(bar_top) + "\" width=\"" +
             format_double(bar_w * 0.92) + "\" height=\"" + format_double(bar_h) +
             "\" fill=\"" + kColors[s % 4] + "\"/>\n";
    }
    svg += "<text x=\"" + format_double(group_x + group_w * 0.4) + "\" y=\"" +
           format_double(height - bottom + 16) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
           categories[c] + "</text>\n";
  }

  // Legend.
  double lx = left + 8, ly = top + 8;
  for (std::size_t s = 0; s < n_series; ++s) {
    svg += "<rect x=\"" + format_double(lx) + "\" y=\"" +
           format_double(ly + 18 * static_cast<double>(s) - 9) +
           "\" width=\"12\" height=\"12\" fill=\"" + kColors[s % 4] + "\"/>\n";
    svg += "<text x=\"" + format_double(lx + 18) + "\" y=\"" +
           format_double(ly + 18 * static_cast<double>(s) + 2) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + series[s].name +
           "</text>\n";
  }

  svg += "<line x1=\"" + format_double(left) + "\" y1=\"" + format_double(top) +
         "\" x2=\"" + format_double(left) + "\" y2=\"" +
         format_double(height - bottom) + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + format_double(left) + "\" y1=\"" +
         format_double(height - bottom) + "\" x2=\"" + format_double(width - right) +
         "\" y2=\"" + format_double(height - bottom) + "\" stroke=\"black\"/>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace geomenc
