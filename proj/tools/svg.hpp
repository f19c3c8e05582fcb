#pragma once

#include <string>
#include <utility>
#include <vector>

namespace blaschke::cli {

struct PlotLine {
  std::vector<std::pair<double, double>> points;
  std::string color = "#1f77b4";
  std::string label;
  bool markers = false;
};

/// A shaded vertical band [x0, x1] with a label at the top.
struct PlotBand {
  double x0 = 0;
  double x1 = 0;
  std::string label;
  std::string fill = "#eeeeee";
};

struct Plot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotLine> lines;
  std::vector<PlotBand> bands;
};

/// Static SVG markup; identical input gives identical bytes.
std::string render_svg(const Plot& plot);

}  // namespace blaschke::cli
