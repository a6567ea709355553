#pragma once

// Minimal self-contained SVG line plot: data series drawn as <polyline>,
// horizontal reference levels as <line class="reference">, fixed
// 800x600 viewBox with linear axes.

#include <string>
#include <utility>
#include <vector>

namespace bellwave {

struct PlotSeries {
  std::string label;
  std::string color;
  std::vector<std::pair<double, double>> points;
};

struct ReferenceLine {
  std::string label;
  std::string color;
  double y = 0.0;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  double x_min = 0.0, x_max = 1.0;
  double y_min = 0.0, y_max = 1.0;
  std::vector<PlotSeries> series;
  std::vector<ReferenceLine> references;
};

std::string render_svg(const PlotSpec& spec);

}  // namespace bellwave
