#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "isa/algorithm.hpp"
#include "isa/objective.hpp"

namespace isa {

struct Statistics {
  double mean = 0.0;
  double median = 0.0;
  double best = 0.0;
  double worst = 0.0;
  /// Sample standard deviation (n - 1 denominator); 0 for a single run.
  double stddev = 0.0;
  std::size_t runs = 0;

  bool operator==(const Statistics&) const = default;
};

/// Statistics of the final best fitness of each record. Throws
/// std::invalid_argument for an empty list.
Statistics summarize(std::span<const RunRecord> records, Direction direction = Direction::Minimise);
Statistics summarize_values(std::span<const double> values, Direction direction = Direction::Minimise);

/// A run that threw, tagged with what was being run.
class RunError : public std::runtime_error {
public:
  RunError(std::string function_id, std::uint64_t seed, const std::string& what);

  const std::string& function_id() const { return function_id_; }
  std::uint64_t seed() const { return seed_; }

private:
  std::string function_id_;
  std::uint64_t seed_;
};

const std::vector<double>& default_rho_grid();

/// Grid-search seeds start this far above the experiment's base seed so the
/// runs used to choose rho are not the runs that get reported.
inline constexpr std::uint64_t kGridSeedOffset = 1'000'000;

/// Parameters for one run of `spec`: population and iterations come from the
/// spec's defaults unless `overrides` sets them.
struct RunOverrides {
  std::optional<std::size_t> population_size;
  std::optional<std::size_t> iterations;
};

IsaParams params_for(const ObjectiveSpec& spec, IsaParams base, const RunOverrides& overrides);

struct GridPoint {
  double rho = 0.0;
  Statistics stats;
};

struct GridSearchResult {
  std::string function_id;
  double best_rho = 0.0;
  std::vector<GridPoint> table;
};

struct GridSearchConfig {
  std::vector<double> grid = default_rho_grid();
  std::size_t runs = 30;
  std::uint64_t base_seed = 42;
  /// rho and seed are replaced per run.
  IsaParams params;
  RunOverrides overrides;
  /// 0 means one worker per hardware thread.
  std::size_t workers = 0;
};

/// Runs `runs` seeded runs for every rho in the grid and picks the one with
/// the best median (lowest under Minimise). Ties go to the smaller rho.
GridSearchResult grid_search_rho(const ObjectiveRegistry& registry, const std::string& id,
                                 const GridSearchConfig& config);

struct ExperimentConfig {
  std::vector<std::string> function_ids;
  std::size_t runs = 30;
  /// Template; run k uses seed params.seed + k.
  IsaParams params;
  RunOverrides overrides;
  std::map<std::string, double> rho_overrides;
  /// When set, functions without an override get rho from grid_search_rho;
  /// otherwise params.rho is used.
  bool search_rho = true;
  std::vector<double> rho_grid = default_rho_grid();
  /// Runs per grid point; 0 means `runs`.
  std::size_t grid_runs = 0;
  std::size_t workers = 0;
  /// Keep per-run records in the report.
  bool keep_records = false;

  void validate(const ObjectiveRegistry& registry) const;
};

struct FunctionResult {
  std::string function_id;
  double rho = 0.0;
  Statistics stats;
  std::optional<GridSearchResult> grid;
  std::vector<RunRecord> records;
  double runtime_ms = 0.0;
};

struct ExperimentReport {
  std::uint64_t base_seed = 0;
  SignMode sign = SignMode::Attract;
  std::vector<FunctionResult> functions;
  double total_runtime_ms = 0.0;
};

/// Deterministic given the config; independent of the worker count.
ExperimentReport run_experiment(const ObjectiveRegistry& registry, const ExperimentConfig& config);

/// Uniform sampling inside the bounds for `budget` evaluations. The
/// trajectory holds the best-so-far value after every evaluation.
RunRecord random_search_baseline(const ObjectiveRegistry& registry, const std::string& id,
                                 std::size_t budget, std::uint64_t seed);

/// Runs `count` independent jobs on up to `workers` threads and returns the
/// results in index order. The first failing index's exception is rethrown.
template <typename Result, typename Job>
std::vector<Result> parallel_map(std::size_t count, std::size_t workers, Job job);

std::size_t resolve_workers(std::size_t requested);

} // namespace isa

#include "isa/detail/parallel.hpp"
