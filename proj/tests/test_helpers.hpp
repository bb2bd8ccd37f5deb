#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "ecosim/rng.hpp"
#include "ecosim/world.hpp"

namespace ecosim::testing {

// Brute-force all-pairs oracle for radius queries: every index whose
// toroidal distance from center is within radius, ascending. Kept free of
// any spatial-index machinery on purpose.
inline std::vector<std::uint32_t> naive_radius_filter(
    std::span<const Vec2> positions, const World& world, const Vec2& center,
    double radius) {
  std::vector<std::uint32_t> hits;
  for (std::uint32_t i = 0; i < positions.size(); ++i) {
    if (world.toroidal_distance(center, positions[i]) <= radius) hits.push_back(i);
  }
  return hits;
}

inline std::vector<Vec2> random_positions(std::size_t n, const World& world,
                                          RngStream& rng) {
  std::vector<Vec2> positions(n);
  for (Vec2& p : positions) {
    p.x = rng.uniform(0.0, world.width());
    p.y = rng.uniform(0.0, world.height());
  }
  return positions;
}

// Student's t density, straight from the definition via lgamma.
inline double t_pdf(double x, double df) {
  const double c = std::lgamma(0.5 * (df + 1.0)) - std::lgamma(0.5 * df) -
                   0.5 * std::log(df * 3.14159265358979323846);
  return std::exp(c - 0.5 * (df + 1.0) * std::log1p(x * x / df));
}

namespace detail {

inline double simpson(double (*f)(double, double), double df, double a, double b) {
  const double m = 0.5 * (a + b);
  return (b - a) / 6.0 * (f(a, df) + 4.0 * f(m, df) + f(b, df));
}

inline double adaptive(double (*f)(double, double), double df, double a, double b,
                       double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double left = simpson(f, df, a, m);
  const double right = simpson(f, df, m, b);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) < 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive(f, df, a, m, left, 0.5 * tol, depth - 1) +
         adaptive(f, df, m, b, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Independent numeric-integration oracle for the two-tailed p-value of a t
// statistic: integrates the density over [-|t|, |t|] with adaptive Simpson
// and subtracts from one.
inline double t_two_tailed_p_oracle(double t, double df) {
  const double a = std::fabs(t);
  if (a == 0.0) return 1.0;
  const double central =
      detail::adaptive(&t_pdf, df, -a, a, detail::simpson(&t_pdf, df, -a, a),
                       1e-12, 60);
  return 1.0 - central;
}

}  // namespace ecosim::testing
