#pragma once

#include <span>
#include <string>

namespace ecosim {

// One x position (contact radius) with both series values.
struct ChartPoint {
  double x = 0.0;
  double mean_age = 0.0;
  double mean_food_price = 0.0;
};

// Standalone 800x600 SVG line chart: mean age against the left axis and mean
// food price against the right axis, with ticks, markers and a legend.
// Throws ConfigError with fewer than two points.
std::string line_chart_svg(std::span<const ChartPoint> points);
void render_line_chart_svg(std::span<const ChartPoint> points, const std::string& path);

}  // namespace ecosim
