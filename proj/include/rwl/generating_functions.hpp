#pragma once

#include <cstddef>

#include "rwl/series.hpp"

namespace rwl {

// Closed-form generating functions expanded to `order` coefficients.

// egf of the 2 x n grid labeling counts:
//   ((1-2x)^2 atan(2x / sqrt(1-4x)) + 2x sqrt(1-4x)) / (2 sqrt(1-4x)^3)
PowerSeries grid2_egf(std::size_t order = kDefaultSeriesOrder);

// sum_{n>=1} a_n / (n-1)! x^n for A087547:
//   x ((1-x) atan(x / sqrt(1-2x)) + sqrt(1-2x)) / ((1-x) sqrt(1-2x)^3)
PowerSeries a087547_scaled_ogf(std::size_t order = kDefaultSeriesOrder);

// egf of A182525: (x atan(x / sqrt(1-2x)) + sqrt(1-2x)) / sqrt(1-2x)^3
PowerSeries a182525_egf(std::size_t order = kDefaultSeriesOrder);

}  // namespace rwl
