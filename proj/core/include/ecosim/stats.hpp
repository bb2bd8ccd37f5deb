#pragma once

#include <cstddef>
#include <span>

namespace ecosim {

// Mean, sample standard deviation (n-1 denominator) and standard error of
// one sample. A single observation is flagged degenerate with sd = sem = 0.
struct SampleSummary {
  std::size_t n = 0;
  double mean = 0.0;
  double sd = 0.0;
  double sem = 0.0;
  bool degenerate = false;
};

// Throws ConfigError on an empty sample.
SampleSummary summarize_sample(std::span<const double> values);

// Two-sample pooled-variance Student's t-test, two-tailed.
struct TTestResult {
  double t = 0.0;
  double p = 1.0;
};

// Both samples need at least two observations (throws ConfigError
// otherwise). Zero pooled variance degenerates to t = 0, p = 1 for equal
// means and p = 0 (infinite t) for unequal means.
TTestResult students_t_test(std::span<const double> a, std::span<const double> b);

// Regularized incomplete beta function I_x(a, b), evaluated with the
// continued-fraction expansion (modified Lentz).
double regularized_incomplete_beta(double x, double a, double b);

// CDF of Student's t distribution with df degrees of freedom.
double student_t_cdf(double t, double df);

}  // namespace ecosim
