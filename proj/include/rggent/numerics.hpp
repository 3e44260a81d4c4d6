#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace rggent {

// Adaptive Simpson quadrature with interval bisection.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth = 48);

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual_rms = 0.0;
};

// Ordinary least squares y = slope*x + intercept.
SlopeFit ols_fit(std::span<const double> x, std::span<const double> y);

// Sample mean and standard error of the mean.
struct MeanStats {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t n = 0;
};

MeanStats mean_and_std_error(std::span<const double> values);

// Exact-summation log2(m!) (no Stirling approximation).
double log2_factorial(int m);

}  // namespace rggent
