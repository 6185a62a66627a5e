#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace veriflab {

namespace {

constexpr double width = 640.0, height = 400.0;
constexpr double left = 70.0, right = 170.0, top = 40.0, bottom = 50.0;
const char* const palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fmt(const char* f, double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// Plot coordinate, or NaN when the value cannot be drawn on the axis.
double axis_value(double v, bool log) {
  if (!std::isfinite(v)) return std::numeric_limits<double>::quiet_NaN();
  if (log) return v > 0.0 ? std::log10(v) : std::numeric_limits<double>::quiet_NaN();
  return v;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    if (std::isnan(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void settle() {
    if (!(lo <= hi)) lo = 0.0, hi = 1.0;
    if (hi - lo < 1e-12 * std::max(1.0, std::abs(hi))) {
      const double pad = std::max(1e-3, 0.05 * std::abs(hi));
      lo -= pad;
      hi += pad;
    }
  }
};

}  // namespace

std::string line_chart(const Series& series, const std::string& title) {
  Range rx, ry;
  for (const auto& l : series.lines) {
    for (std::size_t i = 0; i < l.x.size(); ++i) {
      const double x = axis_value(l.x[i], series.log_x), y = axis_value(l.y[i], series.log_y);
      if (std::isnan(x) || std::isnan(y)) continue;
      rx.add(x);
      ry.add(y);
    }
  }
  rx.settle();
  ry.settle();
  const double pw = width - left - right, ph = height - top - bottom;
  auto px = [&](double x) { return left + (x - rx.lo) / (rx.hi - rx.lo) * pw; };
  auto py = [&](double y) { return top + (1.0 - (y - ry.lo) / (ry.hi - ry.lo)) * ph; };

  std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" viewBox=\"0 0 640 400\">\n";
  s += "<rect width=\"640\" height=\"400\" fill=\"white\"/>\n";
  s += "<text x=\"320\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" + escape(title) +
       "</text>\n";
  s += "<rect x=\"" + fmt("%.2f", left) + "\" y=\"" + fmt("%.2f", top) + "\" width=\"" + fmt("%.2f", pw) +
       "\" height=\"" + fmt("%.2f", ph) + "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double fx = rx.lo + (rx.hi - rx.lo) * i / 4.0, fy = ry.lo + (ry.hi - ry.lo) * i / 4.0;
    const std::string lx = series.log_x ? "1e" + fmt("%.2g", fx) : fmt("%.4g", fx);
    const std::string ly = series.log_y ? "1e" + fmt("%.2g", fy) : fmt("%.4g", fy);
    s += "<text x=\"" + fmt("%.2f", px(fx)) + "\" y=\"" + fmt("%.2f", top + ph + 16) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">" + lx + "</text>\n";
    s += "<text x=\"" + fmt("%.2f", left - 6) + "\" y=\"" + fmt("%.2f", py(fy) + 3) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" + ly + "</text>\n";
  }
  s += "<text x=\"" + fmt("%.2f", left + pw / 2) + "\" y=\"" + fmt("%.2f", height - 10) +
       "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" + escape(series.x_label) + "</text>\n";
  s += "<text x=\"16\" y=\"" + fmt("%.2f", top + ph / 2) + "\" transform=\"rotate(-90 16 " + fmt("%.2f", top + ph / 2) +
       ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" + escape(series.y_label) + "</text>\n";

  for (std::size_t k = 0; k < series.lines.size(); ++k) {
    const auto& l = series.lines[k];
    const char* colour = palette[k % (sizeof palette / sizeof palette[0])];
    std::string points;
    for (std::size_t i = 0; i < l.x.size(); ++i) {
      const double x = axis_value(l.x[i], series.log_x), y = axis_value(l.y[i], series.log_y);
      if (std::isnan(x) || std::isnan(y)) continue;
      points += fmt("%.2f", px(x)) + "," + fmt("%.2f", py(y)) + " ";
    }
    if (!points.empty()) points.pop_back();
    s += "<polyline fill=\"none\" stroke=\"" + std::string(colour) + "\" stroke-width=\"1.5\" points=\"" + points +
         "\"/>\n";
    const double ly = top + 12.0 + 16.0 * static_cast<double>(k);
    s += "<line x1=\"" + fmt("%.2f", width - right + 10) + "\" y1=\"" + fmt("%.2f", ly) + "\" x2=\"" +
         fmt("%.2f", width - right + 30) + "\" y2=\"" + fmt("%.2f", ly) + "\" stroke=\"" + colour +
         "\" stroke-width=\"2\"/>\n";
    s += "<text x=\"" + fmt("%.2f", width - right + 34) + "\" y=\"" + fmt("%.2f", ly + 4) +
         "\" font-family=\"sans-serif\" font-size=\"10\">" + escape(l.label) + "</text>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace veriflab
