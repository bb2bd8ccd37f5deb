#include "ecosim/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <vector>

#include "ecosim/types.hpp"

namespace ecosim {

namespace {

std::string num(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.4g", v);
  return buffer;
}

struct AxisScale {
  double lo = 0.0;
  double hi = 1.0;

  double unit(double v) const { return (v - lo) / (hi - lo); }
};

AxisScale scale_for(double lo, double hi) {
  if (hi <= lo) {  // flat series still needs a finite span
    lo -= 1.0;
    hi += 1.0;
  }
  const double pad = 0.05 * (hi - lo);
  return {lo - pad, hi + pad};
}

}  // namespace

std::string line_chart_svg(std::span<const ChartPoint> points) {
  if (points.size() < 2)
    throw ConfigError("line chart needs at least two points");

  std::vector<ChartPoint> data(points.begin(), points.end());
  std::sort(data.begin(), data.end(),
            [](const ChartPoint& a, const ChartPoint& b) { return a.x < b.x; });

  constexpr double kWidth = 800.0, kHeight = 600.0;
  constexpr double kLeft = 80.0, kRight = 720.0, kTop = 60.0, kBottom = 540.0;
  constexpr int kTicks = 5;

  auto min_max = [&](auto get) {
    double lo = get(data.front()), hi = lo;
    for (const ChartPoint& p : data) {
      lo = std::min(lo, get(p));
      hi = std::max(hi, get(p));
    }
    return std::pair{lo, hi};
  };
  const auto [x_lo, x_hi] = min_max([](const ChartPoint& p) { return p.x; });
  const auto [a_lo, a_hi] = min_max([](const ChartPoint& p) { return p.mean_age; });
  const auto [p_lo, p_hi] =
      min_max([](const ChartPoint& p) { return p.mean_food_price; });

  const AxisScale xs = scale_for(x_lo, x_hi);
  const AxisScale as = scale_for(a_lo, a_hi);
  const AxisScale ps = scale_for(p_lo, p_hi);

  auto px = [&](double v) { return kLeft + xs.unit(v) * (kRight - kLeft); };
  auto py_age = [&](double v) { return kBottom - as.unit(v) * (kBottom - kTop); };
  auto py_price = [&](double v) { return kBottom - ps.unit(v) * (kBottom - kTop); };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
         "viewBox=\"0 0 800 600\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";

  // Frame.
  svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" +
         num(kLeft) + "\" y2=\"" + num(kBottom) + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + num(kRight) + "\" y1=\"" + num(kTop) + "\" x2=\"" +
         num(kRight) + "\" y2=\"" + num(kBottom) + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kBottom) + "\" x2=\"" +
         num(kRight) + "\" y2=\"" + num(kBottom) + "\" stroke=\"black\"/>\n";

  // Ticks and labels on all three axes.
  for (int i = 0; i <= kTicks; ++i) {
    const double f = static_cast<double>(i) / kTicks;
    const double x = kLeft + f * (kRight - kLeft);
    const double y = kBottom - f * (kBottom - kTop);
    const double xv = xs.lo + f * (xs.hi - xs.lo);
    const double av = as.lo + f * (as.hi - as.lo);
    const double pv = ps.lo + f * (ps.hi - ps.lo);
    svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(kBottom) + "\" x2=\"" + num(x) +
           "\" y2=\"" + num(kBottom + 6) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + num(x) + "\" y=\"" + num(kBottom + 22) +
           "\" font-size=\"12\" text-anchor=\"middle\">" + num(xv) + "</text>\n";
    svg += "<line x1=\"" + num(kLeft - 6) + "\" y1=\"" + num(y) + "\" x2=\"" +
           num(kLeft) + "\" y2=\"" + num(y) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + num(kLeft - 10) + "\" y=\"" + num(y + 4) +
           "\" font-size=\"12\" text-anchor=\"end\">" + num(av) + "</text>\n";
    svg += "<line x1=\"" + num(kRight) + "\" y1=\"" + num(y) + "\" x2=\"" +
           num(kRight + 6) + "\" y2=\"" + num(y) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + num(kRight + 10) + "\" y=\"" + num(y + 4) +
           "\" font-size=\"12\" text-anchor=\"start\">" + num(pv) + "</text>\n";
  }

  // Axis titles.
  svg += "<text x=\"400\" y=\"580\" font-size=\"14\" text-anchor=\"middle\">"
         "contact radius</text>\n";
  svg += "<text x=\"20\" y=\"300\" font-size=\"14\" text-anchor=\"middle\" "
         "transform=\"rotate(-90 20 300)\">mean age</text>\n";
  svg += "<text x=\"780\" y=\"300\" font-size=\"14\" text-anchor=\"middle\" "
         "transform=\"rotate(90 780 300)\">mean food price</text>\n";

  // Age series: blue line with circle markers, left scale.
  svg += "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"";
  for (const ChartPoint& p : data) {
    svg += num(px(p.x)) + "," + num(py_age(p.mean_age)) + " ";
  }
  svg += "\"/>\n";
  for (const ChartPoint& p : data) {
    svg += "<circle cx=\"" + num(px(p.x)) + "\" cy=\"" + num(py_age(p.mean_age)) +
           "\" r=\"4\" fill=\"#1f77b4\"/>\n";
  }

  // Price series: red line with square markers, right scale.
  svg += "<polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\" points=\"";
  for (const ChartPoint& p : data) {
    svg += num(px(p.x)) + "," + num(py_price(p.mean_food_price)) + " ";
  }
  svg += "\"/>\n";
  for (const ChartPoint& p : data) {
    svg += "<rect x=\"" + num(px(p.x) - 4) + "\" y=\"" +
           num(py_price(p.mean_food_price) - 4) +
           "\" width=\"8\" height=\"8\" fill=\"#d62728\"/>\n";
  }

  // Legend.
  svg += "<circle cx=\"110\" cy=\"30\" r=\"4\" fill=\"#1f77b4\"/>\n";
  svg += "<text x=\"120\" y=\"34\" font-size=\"12\">mean age (left)</text>\n";
  svg += "<rect x=\"256\" y=\"26\" width=\"8\" height=\"8\" fill=\"#d62728\"/>\n";
  svg += "<text x=\"270\" y=\"34\" font-size=\"12\">mean food price (right)</text>\n";

  svg += "</svg>\n";
  return svg;
}

void render_line_chart_svg(std::span<const ChartPoint> points, const std::string& path) {
  const std::string svg = line_chart_svg(points);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << svg;
  if (!out) throw IoError("failed writing: " + path);
}

}  // namespace ecosim
