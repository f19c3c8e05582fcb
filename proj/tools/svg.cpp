#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace blaschke::cli {

namespace {

constexpr double kWidth = 800, kHeight = 500;
constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 50;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string tick(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string r;
  for (char c : s) {
    switch (c) {
      case '<': r += "&lt;"; break;
      case '>': r += "&gt;"; break;
      case '&': r += "&amp;"; break;
      default: r += c;
    }
  }
  return r;
}

}  // namespace

std::string render_svg(const Plot& plot) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& line : plot.lines)
    for (auto [x, y] : line.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  if (!std::isfinite(xmin)) xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;
  const double pad = 0.05 * (ymax - ymin);
  ymin -= pad;
  ymax += pad;

  const double w = kWidth - kLeft - kRight, h = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * w; };
  auto sy = [&](double y) { return kTop + (ymax - y) / (ymax - ymin) * h; };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
    << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "<text x=\"" << num(kWidth / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
    << escape(plot.title) << "</text>\n";

  for (const auto& band : plot.bands) {
    const double x0 = sx(std::max(band.x0, xmin)), x1 = sx(std::min(band.x1, xmax));
    if (x1 <= x0) continue;
    s << "<rect x=\"" << num(x0) << "\" y=\"" << num(kTop) << "\" width=\"" << num(x1 - x0) << "\" height=\""
      << num(h) << "\" fill=\"" << band.fill << "\"/>\n";
    s << "<text x=\"" << num(0.5 * (x0 + x1)) << "\" y=\"" << num(kTop + 14)
      << "\" text-anchor=\"middle\" fill=\"#555\">" << escape(band.label) << "</text>\n";
  }

  s << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\"" << num(w) << "\" height=\"" << num(h)
    << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = xmin + (xmax - xmin) * i / 4, yv = ymin + (ymax - ymin) * i / 4;
    s << "<text x=\"" << num(sx(xv)) << "\" y=\"" << num(kTop + h + 18) << "\" text-anchor=\"middle\">" << tick(xv)
      << "</text>\n";
    s << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(sy(yv) + 4) << "\" text-anchor=\"end\">" << tick(yv)
      << "</text>\n";
  }
  s << "<text x=\"" << num(kLeft + w / 2) << "\" y=\"" << num(kHeight - 10) << "\" text-anchor=\"middle\">"
    << escape(plot.x_label) << "</text>\n";
  s << "<text x=\"16\" y=\"" << num(kTop + h / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
    << num(kTop + h / 2) << ")\">" << escape(plot.y_label) << "</text>\n";

  double legend_y = kTop + 30;
  for (const auto& line : plot.lines) {
    s << "<polyline fill=\"none\" stroke=\"" << line.color << "\" stroke-width=\"1.2\" points=\"";
    bool first = true;
    for (auto [x, y] : line.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      s << (first ? "" : " ") << num(sx(x)) << ',' << num(sy(y));
      first = false;
    }
    s << "\"/>\n";
    if (line.markers)
      for (auto [x, y] : line.points)
        if (std::isfinite(x) && std::isfinite(y))
          s << "<circle cx=\"" << num(sx(x)) << "\" cy=\"" << num(sy(y)) << "\" r=\"3\" fill=\"" << line.color
            << "\"/>\n";
    if (!line.label.empty()) {
      s << "<text x=\"" << num(kLeft + w - 10) << "\" y=\"" << num(legend_y) << "\" text-anchor=\"end\" fill=\""
        << line.color << "\">" << escape(line.label) << "</text>\n";
      legend_y += 16;
    }
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace blaschke::cli
