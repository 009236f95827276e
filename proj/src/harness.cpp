#include "isa/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace isa {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string describe_failure(const std::string& id, std::uint64_t seed, const std::string& what) {
  std::ostringstream msg;
  msg << id << " (seed " << seed << "): " << what;
  return msg.str();
}

RunRecord tagged_run(const Objective& objective, const IsaParams& params) {
  try {
    return run_isa(objective, params);
  } catch (const RunError&) {
    throw;
  } catch (const std::exception& e) {
    throw RunError(objective.id(), params.seed, e.what());
  }
}

} // namespace

RunError::RunError(std::string function_id, std::uint64_t seed, const std::string& what)
    : std::runtime_error(describe_failure(function_id, seed, what)),
      function_id_(std::move(function_id)),
      seed_(seed) {}

Statistics summarize_values(std::span<const double> values, Direction direction) {
  if (values.empty()) throw std::invalid_argument("summarize: no records");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();

  Statistics stats;
  stats.runs = n;
  stats.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(n);
  stats.median = n % 2 == 1 ? sorted[n / 2] : (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
  stats.best = direction == Direction::Minimise ? sorted.front() : sorted.back();
  stats.worst = direction == Direction::Minimise ? sorted.back() : sorted.front();
  if (n > 1) {
    double ss = 0.0;
    for (double v : sorted) ss += (v - stats.mean) * (v - stats.mean);
    stats.stddev = std::sqrt(ss / static_cast<double>(n - 1));
  }
  return stats;
}

Statistics summarize(std::span<const RunRecord> records, Direction direction) {
  std::vector<double> values;
  values.reserve(records.size());
  for (const auto& r : records) values.push_back(r.best_fitness);
  return summarize_values(values, direction);
}

const std::vector<double>& default_rho_grid() {
  static const std::vector<double> grid = {1, 5, 10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
  return grid;
}

std::size_t resolve_workers(std::size_t requested) {
  if (requested > 0) return requested;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

IsaParams params_for(const ObjectiveSpec& spec, IsaParams base, const RunOverrides& overrides) {
  base.population_size = overrides.population_size.value_or(spec.default_population);
  base.iterations = overrides.iterations.value_or(spec.default_iterations);
  return base;
}

GridSearchResult grid_search_rho(const ObjectiveRegistry& registry, const std::string& id,
                                 const GridSearchConfig& config) {
  if (config.grid.empty()) throw std::invalid_argument("grid search needs at least one rho");
  if (config.runs == 0) throw std::invalid_argument("grid search needs at least one run per point");
  for (double rho : config.grid)
    if (!(rho >= 0.0 && rho <= 100.0)) throw std::invalid_argument("grid values must lie in [0, 100]");

  const Objective& objective = registry.get(id);
  const IsaParams base = params_for(objective.spec(), config.params, config.overrides);
  const std::size_t points = config.grid.size();

  auto finals = parallel_map<double>(points * config.runs, config.workers, [&](std::size_t job) {
    IsaParams params = base;
    params.rho = config.grid[job / config.runs];
    params.seed = config.base_seed + job % config.runs;
    return tagged_run(objective, params).best_fitness;
  });

  const Direction direction = objective.spec().direction;
  GridSearchResult result;
  result.function_id = id;
  std::optional<std::size_t> chosen;
  for (std::size_t p = 0; p < points; ++p) {
    const std::span<const double> slice(finals.data() + p * config.runs, config.runs);
    result.table.push_back({config.grid[p], summarize_values(slice, direction)});
    if (!chosen) {
      chosen = p;
      continue;
    }
    const auto& incumbent = result.table[*chosen];
    const auto& candidate = result.table.back();
    if (better(candidate.stats.median, incumbent.stats.median, direction) ||
        (candidate.stats.median == incumbent.stats.median && candidate.rho < incumbent.rho))
      chosen = p;
  }
  result.best_rho = result.table[*chosen].rho;
  return result;
}

void ExperimentConfig::validate(const ObjectiveRegistry& registry) const {
  if (function_ids.empty()) throw std::invalid_argument("experiment needs at least one function");
  if (runs == 0) throw std::invalid_argument("runs must be at least 1");
  for (const auto& id : function_ids) registry.get(id);
  for (const auto& [id, rho] : rho_overrides) {
    registry.get(id);
    if (!(rho >= 0.0 && rho <= 100.0)) throw std::invalid_argument("rho override for " + id + " outside [0, 100]");
  }
  IsaParams probe = params;
  probe.population_size = overrides.population_size.value_or(2);
  probe.iterations = overrides.iterations.value_or(1);
  probe.validate();
  if (search_rho && rho_grid.empty()) throw std::invalid_argument("empty rho grid");
}

ExperimentReport run_experiment(const ObjectiveRegistry& registry, const ExperimentConfig& config) {
  config.validate(registry);
  const auto start = Clock::now();

  ExperimentReport report;
  report.base_seed = config.params.seed;
  report.sign = config.params.displacement_sign;

  for (const auto& id : config.function_ids) {
    const auto function_start = Clock::now();
    const Objective& objective = registry.get(id);
    FunctionResult row;
    row.function_id = id;

    if (auto it = config.rho_overrides.find(id); it != config.rho_overrides.end()) {
      row.rho = it->second;
    } else if (config.search_rho) {
      GridSearchConfig grid;
      grid.grid = config.rho_grid;
      grid.runs = config.grid_runs == 0 ? config.runs : config.grid_runs;
      grid.base_seed = config.params.seed + kGridSeedOffset;
      grid.params = config.params;
      grid.overrides = config.overrides;
      grid.workers = config.workers;
      row.grid = grid_search_rho(registry, id, grid);
      row.rho = row.grid->best_rho;
    } else {
      row.rho = config.params.rho;
    }

    IsaParams base = params_for(objective.spec(), config.params, config.overrides);
    base.rho = row.rho;
    auto records = parallel_map<RunRecord>(config.runs, config.workers, [&](std::size_t k) {
      IsaParams params = base;
      params.seed = config.params.seed + k;
      return tagged_run(objective, params);
    });

    row.stats = summarize(records, objective.spec().direction);
    if (config.keep_records) row.records = std::move(records);
    row.runtime_ms = elapsed_ms(function_start);
    report.functions.push_back(std::move(row));
  }

  report.total_runtime_ms = elapsed_ms(start);
  return report;
}

RunRecord random_search_baseline(const ObjectiveRegistry& registry, const std::string& id,
                                 std::size_t budget, std::uint64_t seed) {
  if (budget == 0) throw std::invalid_argument("random search budget must be at least 1");
  const auto start = Clock::now();
  const Objective& objective = registry.get(id);
  const auto& spec = objective.spec();

  Rng rng(seed);
  Rng noise(split_seed(seed, 1));
  RunRecord record;
  record.function_id = id;
  record.seed = seed;
  record.rho = 0.0;
  record.trajectory.reserve(budget);

  std::vector<double> x(spec.dimension);
  for (std::size_t e = 0; e < budget; ++e) {
    for (std::size_t k = 0; k < spec.dimension; ++k)
      x[k] = rng.uniform(spec.bounds[k].lower, spec.bounds[k].upper);
    double f = 0.0;
    try {
      f = objective(x, noise);
    } catch (const std::exception& ex) {
      throw RunError(id, seed, ex.what());
    }
    if (e == 0 || better(f, record.best_fitness, spec.direction)) {
      record.best_fitness = f;
      record.best_position = x;
    }
    record.trajectory.push_back(record.best_fitness);
  }
  record.elapsed = Clock::now() - start;
  return record;
}

} // namespace isa
