#include "ecosim/stats.hpp"

#include <cmath>
#include <limits>

#include "ecosim/types.hpp"

namespace ecosim {

SampleSummary summarize_sample(std::span<const double> values) {
  if (values.empty()) throw ConfigError("cannot summarize an empty sample");
  SampleSummary s;
  s.n = values.size();
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(s.n);
  if (s.n == 1) {
    s.degenerate = true;
    return s;
  }
  double ss = 0.0;
  for (double v : values) {
    const double d = v - s.mean;
    ss += d * d;
  }
  s.sd = std::sqrt(ss / static_cast<double>(s.n - 1));
  s.sem = s.sd / std::sqrt(static_cast<double>(s.n));
  return s;
}

namespace {

double log_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// Continued fraction for the incomplete beta function, modified Lentz.
double incomplete_beta_cf(double x, double a, double b) {
  constexpr double tiny = 1e-300;
  constexpr double eps = 1e-15;
  constexpr int max_iterations = 300;

  double c = 1.0;
  double d = 1.0 - (a + b) * x / (a + 1.0);
  if (std::fabs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double result = d;

  for (int m = 1; m <= max_iterations; ++m) {
    const double dm = static_cast<double>(m);
    // Even term.
    double numerator = dm * (b - dm) * x / ((a + 2.0 * dm - 1.0) * (a + 2.0 * dm));
    d = 1.0 + numerator * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + numerator / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    result *= d * c;
    // Odd term.
    numerator = -(a + dm) * (a + b + dm) * x / ((a + 2.0 * dm) * (a + 2.0 * dm + 1.0));
    d = 1.0 + numerator * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + numerator / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    result *= delta;
    if (std::fabs(delta - 1.0) < eps) break;
  }
  return result;
}

}  // namespace

double regularized_incomplete_beta(double x, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || std::isnan(x))
    return std::numeric_limits<double>::quiet_NaN();
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double front =
      std::exp(a * std::log(x) + b * std::log1p(-x) - log_beta(a, b));
  // Use the expansion on the side where it converges fast.
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * incomplete_beta_cf(x, a, b) / a;
  }
  return 1.0 - std::exp(b * std::log1p(-x) + a * std::log(x) - log_beta(a, b)) *
                   incomplete_beta_cf(1.0 - x, b, a) / b;
}

double student_t_cdf(double t, double df) {
  if (!(df > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  if (std::isinf(t)) return t > 0 ? 1.0 : 0.0;
  const double tail =
      0.5 * regularized_incomplete_beta(df / (df + t * t), 0.5 * df, 0.5);
  return t >= 0.0 ? 1.0 - tail : tail;
}

TTestResult students_t_test(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2)
    throw ConfigError("t-test requires at least two observations per sample");

  const SampleSummary sa = summarize_sample(a);
  const SampleSummary sb = summarize_sample(b);
  const double na = static_cast<double>(sa.n);
  const double nb = static_cast<double>(sb.n);
  const double df = na + nb - 2.0;
  const double pooled_var =
      ((na - 1.0) * sa.sd * sa.sd + (nb - 1.0) * sb.sd * sb.sd) / df;

  if (pooled_var <= 0.0) {
    if (sa.mean == sb.mean) return {0.0, 1.0};
    const double inf = std::numeric_limits<double>::infinity();
    return {sa.mean > sb.mean ? inf : -inf, 0.0};
  }

  const double t =
      (sa.mean - sb.mean) / std::sqrt(pooled_var * (1.0 / na + 1.0 / nb));
  const double p = 2.0 * student_t_cdf(-std::fabs(t), df);
  return {t, p};
}

}  // namespace ecosim
