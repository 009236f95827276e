#include "isa/benchmarks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "isa/constant_tables.hpp"

namespace isa::benchmarks {

using std::numbers::pi;

double f1_sphere(std::span<const double> x) {
  double sum = 0.0;
  for (double v : x) sum += v * v;
  return sum;
}

double f2_schwefel_2_22(std::span<const double> x) {
  double sum = 0.0;
  double product = 1.0;
  for (double v : x) {
    sum += std::abs(v);
    product *= std::abs(v);
  }
  return sum + product;
}

double f3_schwefel_1_2(std::span<const double> x) {
  double sum = 0.0;
  double prefix = 0.0;
  for (double v : x) {
    prefix += v;
    sum += prefix * prefix;
  }
  return sum;
}

double f4_schwefel_2_21(std::span<const double> x) {
  double largest = 0.0;
  for (double v : x) largest = std::max(largest, std::abs(v));
  return largest;
}

double f5_rosenbrock(std::span<const double> x) {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i + 1] - x[i] * x[i];
    const double b = x[i] - 1.0;
    sum += 100.0 * a * a + b * b;
  }
  return sum;
}

double f6_step(std::span<const double> x) {
  double sum = 0.0;
  for (double v : x) {
    const double s = std::floor(v + 0.5);
    sum += s * s;
  }
  return sum;
}

double f7_quartic_noise(std::span<const double> x, Rng& rng) {
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double sq = x[i] * x[i];
    sum += static_cast<double>(i + 1) * sq * sq;
  }
  return sum + rng.uniform();
}

double f8_schwefel_2_26(std::span<const double> x) {
  double sum = 0.0;
  for (double v : x) sum -= v * std::sin(std::sqrt(std::abs(v)));
  return sum;
}

double f9_rastrigin(std::span<const double> x) {
  double sum = 0.0;
  for (double v : x) sum += v * v - 10.0 * std::cos(2.0 * pi * v) + 10.0;
  return sum;
}

double f10_ackley(std::span<const double> x) {
  const double n = static_cast<double>(x.size());
  double squares = 0.0;
  double cosines = 0.0;
  for (double v : x) {
    squares += v * v;
    cosines += std::cos(2.0 * pi * v);
  }
  const double a = std::exp(-0.2 * std::sqrt(squares / n));
  const double b = std::exp(cosines / n);
  // Grouped so the origin evaluates to exactly zero.
  return 20.0 * (1.0 - a) + (std::numbers::e - b);
}

double f11_griewank(std::span<const double> x) {
  double sum = 0.0;
  double product = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += x[i] * x[i];
    product *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return sum / 4000.0 - product + 1.0;
}

double penalty(double x, double a, double k, int m) {
  if (x > a) return k * std::pow(x - a, m);
  if (x < -a) return k * std::pow(-x - a, m);
  return 0.0;
}

double f12_penalized_1(std::span<const double> x) {
  const std::size_t n = x.size();
  auto y = [&](std::size_t i) { return 1.0 + (x[i] + 1.0) / 4.0; };
  auto sin_sq = [](double v) {
    const double s = std::sin(v);
    return s * s;
  };
  double inner = 10.0 * sin_sq(pi * y(0));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double d = y(i) - 1.0;
    inner += d * d * (1.0 + 10.0 * sin_sq(pi * y(i + 1)));
  }
  const double last = y(n - 1) - 1.0;
  inner += last * last;
  double penalties = 0.0;
  for (double v : x) penalties += penalty(v, 10.0, 100.0, 4);
  return pi / static_cast<double>(n) * inner + penalties;
}

double f13_penalized_2(std::span<const double> x) {
  const std::size_t n = x.size();
  auto sin_sq = [](double v) {
    const double s = std::sin(v);
    return s * s;
  };
  double inner = sin_sq(3.0 * pi * x[0]);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = x[i] - 1.0;
    inner += d * d * (1.0 + sin_sq(3.0 * pi * x[i] + 1.0));
  }
  const double last = x[n - 1] - 1.0;
  inner += last * last * (1.0 + sin_sq(2.0 * pi * x[n - 1]));
  double penalties = 0.0;
  for (double v : x) penalties += penalty(v, 5.0, 100.0, 4);
  return 0.1 * inner + penalties;
}

double f14_foxholes(std::span<const double> x) {
  double sum = 1.0 / 500.0;
  for (std::size_t j = 0; j < 25; ++j) {
    double denom = static_cast<double>(j + 1);
    for (std::size_t i = 0; i < 2; ++i) denom += std::pow(x[i] - tables::foxholes_a[i][j], 6);
    sum += 1.0 / denom;
  }
  return 1.0 / sum;
}

double f15_kowalik(std::span<const double> x) {
  double sum = 0.0;
  for (std::size_t i = 0; i < tables::kowalik_a.size(); ++i) {
    const double b = 1.0 / tables::kowalik_b_inverse[i];
    const double model = x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
    const double r = tables::kowalik_a[i] - model;
    sum += r * r;
  }
  return sum;
}

double f16_six_hump_camel(std::span<const double> x) {
  const double a = x[0];
  const double b = x[1];
  const double a2 = a * a;
  const double b2 = b * b;
  return 4.0 * a2 - 2.1 * a2 * a2 + a2 * a2 * a2 / 3.0 + a * b - 4.0 * b2 + 4.0 * b2 * b2;
}

double f17_branin(std::span<const double> x) {
  const double t = x[1] - 5.1 / (4.0 * pi * pi) * x[0] * x[0] + 5.0 / pi * x[0] - 6.0;
  return t * t + 10.0 * (1.0 - 1.0 / (8.0 * pi)) * std::cos(x[0]) + 10.0;
}

double f18_goldstein_price(std::span<const double> x) {
  const double a = x[0];
  const double b = x[1];
  const double s = a + b + 1.0;
  const double t = 2.0 * a - 3.0 * b;
  const double left =
      1.0 + s * s * (19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b);
  const double right =
      30.0 + t * t * (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b + 27.0 * b * b);
  return left * right;
}

namespace {

template <std::size_t D>
double hartmann(std::span<const double> x,
                const std::array<std::array<double, D>, 4>& a,
                const std::array<std::array<double, D>, 4>& p) {
  double sum = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    double exponent = 0.0;
    for (std::size_t j = 0; j < D; ++j) {
      const double d = x[j] - p[i][j];
      exponent += a[i][j] * d * d;
    }
    sum += tables::hartmann_c[i] * std::exp(-exponent);
  }
  return -sum;
}

} // namespace

double f19_hartmann3(std::span<const double> x) {
  return hartmann(x, tables::hartmann3_a, tables::hartmann3_p);
}

double f20_hartmann6(std::span<const double> x) {
  return hartmann(x, tables::hartmann6_a, tables::hartmann6_p);
}

double shekel(std::span<const double> x, std::size_t terms) {
  double sum = 0.0;
  for (std::size_t i = 0; i < terms; ++i) {
    double sq = 0.0;
    for (std::size_t j = 0; j < 4; ++j) {
      const double d = x[j] - tables::shekel_a[i][j];
      sq += d * d;
    }
    sum += 1.0 / (sq + tables::shekel_c[i]);
  }
  return -sum;
}

double f21_shekel5(std::span<const double> x) { return shekel(x, 5); }
double f22_shekel7(std::span<const double> x) { return shekel(x, 7); }
double f23_shekel10(std::span<const double> x) { return shekel(x, 10); }

namespace {

Objective make(std::string id, Bounds bounds, std::size_t iterations,
               std::optional<double> optimum, std::vector<double> at,
               DeterministicFn fn) {
  ObjectiveSpec spec;
  spec.id = std::move(id);
  spec.dimension = bounds.size();
  spec.bounds = std::move(bounds);
  spec.default_population = 50;
  spec.default_iterations = iterations;
  spec.known_optimum = optimum;
  spec.optimum_location = std::move(at);
  return Objective(std::move(spec),
                   [f = std::move(fn)](std::span<const double> x, Rng&) { return f(x); },
                   false);
}

std::vector<double> filled(std::size_t n, double v) { return std::vector<double>(n, v); }

} // namespace

std::vector<Objective> catalog() {
  constexpr std::size_t n = 30;
  std::vector<Objective> out;
  out.reserve(23);
  out.push_back(make("F1", uniform_bounds(n, -100, 100), 1000, 0.0, filled(n, 0), f1_sphere));
  out.push_back(make("F2", uniform_bounds(n, -10, 10), 1000, 0.0, filled(n, 0), f2_schwefel_2_22));
  out.push_back(make("F3", uniform_bounds(n, -100, 100), 1000, 0.0, filled(n, 0), f3_schwefel_1_2));
  out.push_back(make("F4", uniform_bounds(n, -100, 100), 1000, 0.0, filled(n, 0), f4_schwefel_2_21));
  out.push_back(make("F5", uniform_bounds(n, -30, 30), 1000, 0.0, filled(n, 1), f5_rosenbrock));
  out.push_back(make("F6", uniform_bounds(n, -100, 100), 1000, 0.0, filled(n, 0), f6_step));
  {
    ObjectiveSpec spec;
    spec.id = "F7";
    spec.dimension = n;
    spec.bounds = uniform_bounds(n, -1.28, 1.28);
    spec.default_population = 50;
    spec.default_iterations = 1000;
    out.emplace_back(std::move(spec), f7_quartic_noise, true);
  }
  out.push_back(make("F8", uniform_bounds(n, -500, 500), 1000, -418.9828872724338 * n,
                     filled(n, 420.968746), f8_schwefel_2_26));
  out.push_back(make("F9", uniform_bounds(n, -5.12, 5.12), 1000, 0.0, filled(n, 0), f9_rastrigin));
  out.push_back(make("F10", uniform_bounds(n, -32, 32), 1000, 0.0, filled(n, 0), f10_ackley));
  out.push_back(make("F11", uniform_bounds(n, -600, 600), 1000, 0.0, filled(n, 0), f11_griewank));
  out.push_back(make("F12", uniform_bounds(n, -50, 50), 1000, 0.0, filled(n, -1), f12_penalized_1));
  out.push_back(make("F13", uniform_bounds(n, -50, 50), 1000, 0.0, filled(n, 1), f13_penalized_2));
  out.push_back(make("F14", uniform_bounds(2, -65.53, 65.53), 500, 0.998003837794449,
                     {-31.97833, -31.97833}, f14_foxholes));
  out.push_back(make("F15", uniform_bounds(4, -5, 5), 500, 3.075e-4,
                     {0.192833, 0.190836, 0.123117, 0.135766}, f15_kowalik));
  out.push_back(make("F16", uniform_bounds(2, -5, 5), 1000, -1.031628453489877,
                     {0.0898420131, -0.7126564030}, f16_six_hump_camel));
  out.push_back(make("F17", Bounds{{-5, 10}, {0, 15}}, 500, 0.397887357729738,
                     {pi, 2.275}, f17_branin));
  out.push_back(make("F18", uniform_bounds(2, -5, 5), 500, 3.0, {0.0, -1.0}, f18_goldstein_price));
  out.push_back(make("F19", uniform_bounds(3, 0, 1), 500, -3.862782147820755,
                     {0.114614, 0.555649, 0.852547}, f19_hartmann3));
  out.push_back(make("F20", uniform_bounds(6, 0, 1), 500, -3.322368011415515,
                     {0.20169, 0.150011, 0.476874, 0.275332, 0.311652, 0.6573}, f20_hartmann6));
  out.push_back(make("F21", uniform_bounds(4, 0, 10), 500, -10.153199679058231,
                     {4.00003715, 4.00013327, 4.00003715, 4.00013327}, f21_shekel5));
  out.push_back(make("F22", uniform_bounds(4, 0, 10), 500, -10.402940566818664,
                     {4.00057291, 4.00068936, 3.99948971, 3.99960616}, f22_shekel7));
  out.push_back(make("F23", uniform_bounds(4, 0, 10), 500, -10.536409816692046,
                     {4.00074671, 4.00059295, 3.99966328, 3.99950951}, f23_shekel10));
  return out;
}

} // namespace isa::benchmarks
