#pragma once

// Independent reference computations used to derive expected values.
// Nothing here calls into the optimizer.

#include <cmath>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace oracles {

/// Dense grid search of -x*sin(sqrt|x|) on [-500, 500]; returns (argmin, min).
inline std::pair<double, double> schwefel_coordinate_minimum(std::size_t points) {
  double best_x = 0.0;
  double best = INFINITY;
  for (std::size_t i = 0; i < points; ++i) {
    const double x = -500.0 + 1000.0 * static_cast<double>(i) / static_cast<double>(points - 1);
    const double v = -x * std::sin(std::sqrt(std::abs(x)));
    if (v < best) {
      best = v;
      best_x = x;
    }
  }
  return {best_x, best};
}

struct Minimum {
  std::vector<double> x;
  double value;
};

/// Compass search: try +/- step along each axis, halve the step when no move
/// improves, stop once the step drops below `tolerance`.
inline Minimum pattern_search(const std::function<double(std::span<const double>)>& f,
                              std::vector<double> x, double step, double tolerance) {
  double value = f(x);
  while (step > tolerance) {
    bool moved = false;
    for (std::size_t k = 0; k < x.size(); ++k) {
      for (double sign : {1.0, -1.0}) {
        auto trial = x;
        trial[k] += sign * step;
        const double v = f(trial);
        if (v < value) {
          value = v;
          x = std::move(trial);
          moved = true;
        }
      }
    }
    if (!moved) step /= 2.0;
  }
  return {std::move(x), value};
}

} // namespace oracles
