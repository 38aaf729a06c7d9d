#pragma once

#include <cstddef>
#include <functional>

namespace rwl {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  std::size_t max_intervals = 1'000'000;
};

struct QuadratureResult {
  double value = 0;
  double error_estimate = 0;
  std::size_t intervals = 0;
  bool converged = true;
};

// Adaptive Simpson with the interval-halving error estimate and Richardson
// correction. The tolerance budget is max(abs_tol, rel_tol * |coarse estimate|)
// and is split in half at every bisection. Stops refining once max_intervals
// subintervals exist and reports converged = false.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  const QuadratureOptions& opts = {});

}  // namespace rwl
