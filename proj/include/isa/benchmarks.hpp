#pragma once

#include <span>
#include <vector>

#include "isa/objective.hpp"

// The 23 classic unimodal (F1-F7) and multimodal (F8-F23) test functions.
// All are minimised. The raw formulas accept any length that makes sense for
// them; dimension checks happen in Objective.
namespace isa::benchmarks {

double f1_sphere(std::span<const double> x);
double f2_schwefel_2_22(std::span<const double> x);
double f3_schwefel_1_2(std::span<const double> x);
double f4_schwefel_2_21(std::span<const double> x);
double f5_rosenbrock(std::span<const double> x);
double f6_step(std::span<const double> x);
/// Quartic plus a uniform [0, 1) draw from `rng`.
double f7_quartic_noise(std::span<const double> x, Rng& rng);
double f8_schwefel_2_26(std::span<const double> x);
double f9_rastrigin(std::span<const double> x);
double f10_ackley(std::span<const double> x);
double f11_griewank(std::span<const double> x);
double f12_penalized_1(std::span<const double> x);
double f13_penalized_2(std::span<const double> x);
double f14_foxholes(std::span<const double> x);
double f15_kowalik(std::span<const double> x);
double f16_six_hump_camel(std::span<const double> x);
double f17_branin(std::span<const double> x);
double f18_goldstein_price(std::span<const double> x);
double f19_hartmann3(std::span<const double> x);
double f20_hartmann6(std::span<const double> x);
double f21_shekel5(std::span<const double> x);
double f22_shekel7(std::span<const double> x);
double f23_shekel10(std::span<const double> x);

/// Penalty term of F12/F13: k(x-a)^m above a, k(-x-a)^m below -a, else 0.
double penalty(double x, double a, double k, int m);

/// Shekel family with the first `terms` rows of the coefficient table.
double shekel(std::span<const double> x, std::size_t terms);

/// Specs and callbacks for F1..F23 in catalog order.
std::vector<Objective> catalog();

} // namespace isa::benchmarks
