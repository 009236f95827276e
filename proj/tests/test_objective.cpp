#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "isa/algorithm.hpp"
#include "isa/benchmarks.hpp"
#include "isa/constant_tables.hpp"
#include "isa/objective.hpp"
#include "oracles.hpp"

using namespace isa;

namespace {

struct TableRow {
  const char* id;
  std::size_t dim;
  double lower, upper;
  std::size_t iterations;
};

// Catalog: domain, Dim(n), population 50, iteration budget.
constexpr TableRow kTable[] = {
    {"F1", 30, -100, 100, 1000},   {"F2", 30, -10, 10, 1000},      {"F3", 30, -100, 100, 1000},
    {"F4", 30, -100, 100, 1000},   {"F5", 30, -30, 30, 1000},      {"F6", 30, -100, 100, 1000},
    {"F7", 30, -1.28, 1.28, 1000}, {"F8", 30, -500, 500, 1000},    {"F9", 30, -5.12, 5.12, 1000},
    {"F10", 30, -32, 32, 1000},    {"F11", 30, -600, 600, 1000},   {"F12", 30, -50, 50, 1000},
    {"F13", 30, -50, 50, 1000},    {"F14", 2, -65.53, 65.53, 500}, {"F15", 4, -5, 5, 500},
    {"F16", 2, -5, 5, 1000},       {"F18", 2, -5, 5, 500},         {"F19", 3, 0, 1, 500},
    {"F20", 6, 0, 1, 500},         {"F21", 4, 0, 10, 500},         {"F22", 4, 0, 10, 500},
    {"F23", 4, 0, 10, 500},
};

std::vector<double> random_point(const ObjectiveSpec& spec, std::mt19937_64& gen) {
  std::vector<double> x(spec.dimension);
  for (std::size_t k = 0; k < x.size(); ++k)
    x[k] = std::uniform_real_distribution<double>(spec.bounds[k].lower, spec.bounds[k].upper)(gen);
  return x;
}

} // namespace

TEST_CASE("catalog matches the reference table") {
  const auto& registry = builtin_registry();
  CHECK(registry.ids().size() == 23);
  for (const auto& row : kTable) {
    CAPTURE(row.id);
    const auto& spec = registry.spec_of(row.id);
    CHECK(spec.dimension == row.dim);
    CHECK(spec.bounds.size() == row.dim);
    for (const auto& b : spec.bounds) {
      CHECK(b.lower == row.lower);
      CHECK(b.upper == row.upper);
    }
    CHECK(spec.default_population == 50);
    CHECK(spec.default_iterations == row.iterations);
    CHECK(spec.direction == Direction::Minimise);
  }
  const auto& branin = registry.spec_of("F17");
  CHECK(branin.bounds == Bounds{{-5, 10}, {0, 15}});
  CHECK(branin.default_iterations == 500);
}

TEST_CASE("spec_of reports unknown ids as not found") {
  CHECK_THROWS_AS(builtin_registry().spec_of("F24"), NotFoundError);
  CHECK_THROWS_AS(builtin_registry().spec_of(""), NotFoundError);
}

TEST_CASE("evaluate examples") {
  const auto& r = builtin_registry();
  CHECK(r.evaluate("F1", std::vector<double>(30, 0.0)) == 0.0);
  CHECK(r.evaluate("F11", std::vector<double>(30, 0.0)) == 0.0);
  CHECK(r.evaluate("F5", std::vector<double>(30, 1.0)) == 0.0);
  CHECK(r.evaluate("F17", std::vector<double>{std::numbers::pi, 2.275}) ==
        doctest::Approx(0.3979).epsilon(1e-4));
  CHECK(r.evaluate("F16", std::vector<double>{0.08983, -0.7126}) ==
        doctest::Approx(-1.0316).epsilon(1e-4));
}

TEST_CASE("F8 optimum agrees with a per-coordinate grid search") {
  const auto [x_star, per_coordinate] = oracles::schwefel_coordinate_minimum(2'000'001);
  CHECK(x_star == doctest::Approx(420.9687).epsilon(1e-6));
  const double oracle = 30.0 * per_coordinate;
  CHECK(oracle == doctest::Approx(-12569.5).epsilon(1e-5));
  const double value = builtin_registry().evaluate("F8", std::vector<double>(30, 420.9687));
  CHECK(std::abs(value - oracle) < 1e-3);
  CHECK(std::abs(*builtin_registry().spec_of("F8").known_optimum - oracle) < 1e-3);
}

TEST_CASE("every stored optimum is attained at its stored location") {
  const auto& r = builtin_registry();
  for (const auto& id : r.ids()) {
    CAPTURE(id);
    const auto& spec = r.spec_of(id);
    if (id == "F7") {
      CHECK_FALSE(spec.known_optimum.has_value());
      continue;
    }
    REQUIRE(spec.known_optimum.has_value());
    REQUIRE(spec.optimum_location.size() == spec.dimension);
    CHECK(std::abs(r.evaluate(id, spec.optimum_location) - *spec.known_optimum) <= 1e-3);
  }
}

TEST_CASE("analytic optima evaluate to exactly zero") {
  const auto& r = builtin_registry();
  for (const char* id : {"F1", "F2", "F3", "F4", "F6", "F9", "F10", "F11"}) {
    CAPTURE(id);
    CHECK(r.evaluate(id, std::vector<double>(30, 0.0)) == 0.0);
  }
  CHECK(r.evaluate("F5", std::vector<double>(30, 1.0)) == 0.0);
}

TEST_CASE("Shekel optima survive local refinement") {
  const auto& r = builtin_registry();
  const std::pair<const char*, double> literature[] = {
      {"F21", -10.1532}, {"F22", -10.4029}, {"F23", -10.5364}};
  for (const auto& [id, value] : literature) {
    CAPTURE(id);
    const auto& spec = r.spec_of(id);
    const auto refined = oracles::pattern_search(
        [&](std::span<const double> x) { return r.evaluate(id, x); },
        std::vector<double>(4, 4.0), 0.5, 1e-10);
    CHECK(std::abs(refined.value - value) < 1e-3);
    CHECK(std::abs(refined.value - *spec.known_optimum) < 1e-6);
  }
}

TEST_CASE("constant tables have the published shapes") {
  static_assert(tables::foxholes_a.size() == 2 && tables::foxholes_a[0].size() == 25);
  static_assert(tables::kowalik_a.size() == 11 && tables::kowalik_b_inverse.size() == 11);
  static_assert(tables::hartmann3_a.size() == 4 && tables::hartmann3_a[0].size() == 3);
  static_assert(tables::hartmann6_p.size() == 4 && tables::hartmann6_p[0].size() == 6);
  static_assert(tables::shekel_a.size() == 10 && tables::shekel_c.size() == 10);
  CHECK(tables::foxholes_a[0][6] == -16);
  CHECK(tables::foxholes_a[1][6] == -16);
}

TEST_CASE("dimension mismatch is an invalid argument") {
  const auto& r = builtin_registry();
  CHECK_THROWS_AS(r.evaluate("F1", std::vector<double>(29, 0.0)), std::invalid_argument);
  CHECK_THROWS_AS(r.evaluate("F17", std::vector<double>{1.0}), std::invalid_argument);
  Rng rng(1);
  CHECK_THROWS_AS(r.evaluate("F7", std::vector<double>(3, 0.0), rng), std::invalid_argument);
}

TEST_CASE("F7 draws its noise from the supplied stream") {
  const auto& r = builtin_registry();
  const std::vector<double> x(30, 0.1);
  CHECK_THROWS_AS(r.evaluate("F7", x), std::invalid_argument);
  Rng a(9), b(9);
  const double first = r.evaluate("F7", x, a);
  CHECK(first == r.evaluate("F7", x, b));
  CHECK(a.draws() == 1);
  double quartic = 0.0;
  for (int i = 0; i < 30; ++i) quartic += (i + 1) * std::pow(0.1, 4);
  CHECK(first >= quartic - 1e-12);
  CHECK(first < quartic + 1.0);
}

TEST_CASE("deterministic objectives are bit-reproducible and F1 is even") {
  const auto& r = builtin_registry();
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    for (const auto& id : r.ids()) {
      if (id == "F7") continue;
      const auto x = random_point(r.spec_of(id), gen);
      CHECK(r.evaluate(id, x) == r.evaluate(id, x));
    }
    auto x = random_point(r.spec_of("F1"), gen);
    const double f = r.evaluate("F1", x);
    for (double& v : x) v = -v;
    CHECK(r.evaluate("F1", x) == f);
  }
}

TEST_CASE("F9, F10 and F11 are non-negative on their domains") {
  const auto& r = builtin_registry();
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 2000; ++trial) {
    for (const char* id : {"F9", "F10", "F11"}) {
      const auto x = random_point(r.spec_of(id), gen);
      CHECK(r.evaluate(id, x) >= 0.0);
    }
  }
}

TEST_CASE("step function and penalty term edge cases") {
  using namespace benchmarks;
  CHECK(f6_step(std::vector<double>{0.49, -0.5}) == 0.0);
  CHECK(f6_step(std::vector<double>{0.5}) == 1.0);
  CHECK(f6_step(std::vector<double>{-0.51}) == 1.0);
  CHECK(penalty(10.0, 10.0, 100.0, 4) == 0.0);
  CHECK(penalty(-10.0, 10.0, 100.0, 4) == 0.0);
  CHECK(penalty(11.0, 10.0, 100.0, 4) == 100.0);
  CHECK(penalty(-12.0, 10.0, 100.0, 4) == 1600.0);
  CHECK(f12_penalized_1(std::vector<double>(30, -1.0)) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(f13_penalized_2(std::vector<double>(30, 1.0)) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("registering user objectives") {
  ObjectiveRegistry registry;
  ObjectiveSpec sphere;
  sphere.id = "sphere2";
  sphere.dimension = 2;
  sphere.bounds = uniform_bounds(2, -1, 1);
  sphere.default_iterations = 20;
  CHECK(registry.add(sphere, [](std::span<const double> x) { return x[0] * x[0] + x[1] * x[1]; }) ==
        "sphere2");
  CHECK(registry.contains("sphere2"));
  CHECK(registry.ids().back() == "sphere2");

  IsaParams params;
  params.population_size = 10;
  params.iterations = 20;
  const auto record = run_isa(registry.get("sphere2"), params);
  CHECK(record.trajectory.size() == 20);
  CHECK(record.best_fitness < 2.0);

  SUBCASE("duplicate id conflicts") {
    CHECK_THROWS_AS(registry.add(sphere, [](std::span<const double>) { return 0.0; }), ConflictError);
    auto clash = sphere;
    clash.id = "F1";
    CHECK_THROWS_AS(registry.add(clash, [](std::span<const double>) { return 0.0; }), ConflictError);
  }
  SUBCASE("inverted or empty bounds are rejected") {
    auto bad = sphere;
    bad.id = "bad";
    bad.bounds = Bounds{{1, 1}, {-1, 1}};
    CHECK_THROWS_AS(registry.add(bad, [](std::span<const double>) { return 0.0; }), std::invalid_argument);
    bad.bounds = Bounds{{2, 1}, {-1, 1}};
    CHECK_THROWS_AS(registry.add(bad, [](std::span<const double>) { return 0.0; }), std::invalid_argument);
    CHECK_FALSE(registry.contains("bad"));
  }
  SUBCASE("dimension must match bounds") {
    auto bad = sphere;
    bad.id = "bad";
    bad.dimension = 3;
    CHECK_THROWS_AS(registry.add(bad, [](std::span<const double>) { return 0.0; }), std::invalid_argument);
  }
}

TEST_CASE("registered quadratic converges near its analytic optimum") {
  ObjectiveRegistry registry;
  ObjectiveSpec spec;
  spec.id = "shifted";
  spec.dimension = 1;
  spec.bounds = uniform_bounds(1, -10, 10);
  spec.default_iterations = 200;
  spec.known_optimum = 0.0;
  spec.optimum_location = {3.0};
  registry.add(spec, [](std::span<const double> x) { return (x[0] - 3.0) * (x[0] - 3.0); });

  double worst_attract = 0.0, worst_literal = 0.0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    IsaParams params;
    params.seed = seed;
    params.iterations = 200;
    const auto attract = run_isa(registry.get("shifted"), params);
    params.displacement_sign = SignMode::Literal;
    const auto literal = run_isa(registry.get("shifted"), params);
    worst_attract = std::max(worst_attract, std::abs(attract.best_position[0] - 3.0));
    worst_literal = std::max(worst_literal, std::abs(literal.best_position[0] - 3.0));
  }
  // Attracting agents cluster early, so only the coarse bound holds there.
  CHECK(worst_attract < 1.0);
  CHECK(worst_literal < 1e-2);
}

TEST_CASE("selector resolution") {
  const auto& r = builtin_registry();
  CHECK(r.select("all").size() == 23);
  CHECK(r.select("F3,F17") == std::vector<std::string>{"F3", "F17"});
  CHECK_THROWS_AS(r.select("F3,nope"), NotFoundError);
  CHECK_THROWS_AS(r.select(","), std::invalid_argument);
}
