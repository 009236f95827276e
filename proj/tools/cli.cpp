#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "isa/algorithm.hpp"
#include "isa/harness.hpp"
#include "isa/objective.hpp"
#include "isa/report_io.hpp"

namespace isa::cli {

namespace {

using io::Json;

/// Flag values shared by every subcommand.
struct CliConfig {
  std::string functions;
  std::uint64_t seed = 42;
  std::size_t runs = 30;
  std::optional<double> rho;
  std::string output;
  std::string format = "json";
  std::string sign = "attract";
  bool verbose = false;
  bool timing = false;
  std::size_t workers = 0;
  std::size_t grid_runs = 0;
  std::vector<double> grid;
  std::optional<std::size_t> iterations;
  std::optional<std::size_t> population;
};

/// Argument problems detected after parsing; reported with exit code 2.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

void add_format(CLI::App* cmd, CliConfig& cfg) {
  cmd->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

void add_output(CLI::App* cmd, CliConfig& cfg) {
  cmd->add_option("-o,--output", cfg.output, "Write output to this file instead of stdout");
}

void add_run_options(CLI::App* cmd, CliConfig& cfg, bool with_runs) {
  cmd->add_option("--seed", cfg.seed, "Base random seed")->capture_default_str();
  if (with_runs)
    cmd->add_option("--runs", cfg.runs, "Runs per function")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  cmd->add_option("--rho", cfg.rho, "Attraction extent rho; grid-searched when omitted")
      ->check(CLI::Range(0.0, 100.0));
  cmd->add_option("--sign", cfg.sign, "Displacement direction")
      ->check(CLI::IsMember({"attract", "literal"}))
      ->capture_default_str();
  cmd->add_option("--grid-runs", cfg.grid_runs, "Runs per rho during grid search (default: --runs)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--iterations", cfg.iterations, "Override the function's iteration budget")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--population", cfg.population, "Override the function's population size")
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
  cmd->add_option("--workers", cfg.workers, "Concurrent runs (default: hardware threads)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_flag("--timing", cfg.timing, "Include wall-clock timings (output is then not reproducible)");
}

void add_fn(CLI::App* cmd, CliConfig& cfg, bool required, const char* help) {
  auto* opt = cmd->add_option("--fn", cfg.functions, help);
  if (required) opt->required();
}

std::vector<std::string> resolve_functions(const ObjectiveRegistry& registry, const std::string& selector) {
  try {
    return registry.select(selector);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

IsaParams base_params(const CliConfig& cfg) {
  IsaParams params;
  params.seed = cfg.seed;
  params.displacement_sign = parse_sign_mode(cfg.sign);
  if (cfg.rho) params.rho = *cfg.rho;
  return params;
}

RunOverrides overrides(const CliConfig& cfg) { return {cfg.population, cfg.iterations}; }

ExperimentConfig experiment_config(const CliConfig& cfg, std::vector<std::string> ids) {
  ExperimentConfig config;
  config.function_ids = std::move(ids);
  config.runs = cfg.runs;
  config.params = base_params(cfg);
  config.overrides = overrides(cfg);
  config.search_rho = !cfg.rho.has_value();
  config.grid_runs = cfg.grid_runs;
  config.workers = cfg.workers;
  config.keep_records = cfg.verbose;
  return config;
}

/// rho for a single-function command: the flag, or a grid search.
std::pair<double, std::optional<GridSearchResult>> choose_rho(const ObjectiveRegistry& registry,
                                                               const std::string& id,
                                                               const CliConfig& cfg) {
  if (cfg.rho) return {*cfg.rho, std::nullopt};
  GridSearchConfig grid;
  grid.runs = cfg.grid_runs == 0 ? cfg.runs : cfg.grid_runs;
  grid.base_seed = cfg.seed + kGridSeedOffset;
  grid.params = base_params(cfg);
  grid.overrides = overrides(cfg);
  grid.workers = cfg.workers;
  auto result = grid_search_rho(registry, id, grid);
  return {result.best_rho, std::move(result)};
}

std::string list_command(const ObjectiveRegistry& registry, const CliConfig& cfg) {
  std::ostringstream out;
  if (cfg.format == "csv")
    io::write_catalog_csv(out, registry);
  else
    out << io::catalog_json(registry).dump(2) << '\n';
  return out.str();
}

std::string run_command(const ObjectiveRegistry& registry, const CliConfig& cfg) {
  const auto ids = resolve_functions(registry, cfg.functions);
  if (ids.size() != 1) throw UsageError("run takes exactly one function id");
  if (cfg.format != "json") throw UsageError("run writes json only");
  const Objective& objective = registry.get(ids.front());

  const auto [rho, grid] = choose_rho(registry, objective.id(), cfg);
  IsaParams params = params_for(objective.spec(), base_params(cfg), overrides(cfg));
  params.rho = rho;
  const RunRecord record = run_isa(objective, params);

  Json json = io::run_record_json(record, cfg.timing);
  json["sign"] = cfg.sign;
  if (grid) json["grid_search"] = io::grid_search_json(*grid);
  return json.dump(2) + '\n';
}

std::string experiment_command(const ObjectiveRegistry& registry, const CliConfig& cfg) {
  const auto ids = resolve_functions(registry, cfg.functions.empty() ? "all" : cfg.functions);
  const ExperimentReport report = run_experiment(registry, experiment_config(cfg, ids));
  std::ostringstream out;
  if (cfg.format == "csv")
    io::write_report_csv(out, report);
  else
    out << io::report_json(report, cfg.verbose, cfg.timing).dump(2) << '\n';
  return out.str();
}

std::string grid_command(const ObjectiveRegistry& registry, const CliConfig& cfg) {
  const auto ids = resolve_functions(registry, cfg.functions);
  if (ids.size() != 1) throw UsageError("grid-search takes exactly one function id");
  GridSearchConfig grid;
  if (!cfg.grid.empty()) grid.grid = cfg.grid;
  for (double rho : grid.grid)
    if (!(rho >= 0.0 && rho <= 100.0)) throw UsageError("grid values must lie in [0, 100]");
  grid.runs = cfg.runs;
  grid.base_seed = cfg.seed;
  grid.params = base_params(cfg);
  grid.overrides = overrides(cfg);
  grid.workers = cfg.workers;
  const auto result = grid_search_rho(registry, ids.front(), grid);

  std::ostringstream out;
  if (cfg.format == "csv") {
    io::write_grid_csv(out, result, cfg.seed);
  } else {
    Json json = io::grid_search_json(result);
    json["base_seed"] = cfg.seed;
    json["sign"] = cfg.sign;
    out << json.dump(2) << '\n';
  }
  return out.str();
}

std::string baseline_command(const ObjectiveRegistry& registry, const CliConfig& cfg) {
  const auto ids = resolve_functions(registry, cfg.functions);
  const ExperimentReport isa_report = run_experiment(registry, experiment_config(cfg, ids));

  std::ostringstream csv;
  csv << "# base_seed=" << cfg.seed << " sign=" << cfg.sign << '\n'
      << "id,method,rho,budget,mean,median,best,worst,std,runs\n";
  Json rows = Json::array();

  for (const auto& isa_row : isa_report.functions) {
    const Objective& objective = registry.get(isa_row.function_id);
    const IsaParams params = params_for(objective.spec(), base_params(cfg), overrides(cfg));
    const std::size_t budget = params.population_size * params.iterations;
    auto records = parallel_map<RunRecord>(cfg.runs, cfg.workers, [&](std::size_t k) {
      return random_search_baseline(registry, objective.id(), budget, cfg.seed + k);
    });
    const Statistics random_stats = summarize(records, objective.spec().direction);

    auto csv_row = [&](const char* method, double rho, const Statistics& s) {
      csv << objective.id() << ',' << method << ',' << io::format_real(rho) << ',' << budget << ','
          << io::format_real(s.mean) << ',' << io::format_real(s.median) << ','
          << io::format_real(s.best) << ',' << io::format_real(s.worst) << ','
          << io::format_real(s.stddev) << ',' << s.runs << '\n';
    };
    csv_row("isa", isa_row.rho, isa_row.stats);
    csv_row("random", 0.0, random_stats);

    rows.push_back(Json{{"id", objective.id()},
                        {"budget", budget},
                        {"rho", isa_row.rho},
                        {"isa", io::statistics_json(isa_row.stats)},
                        {"random", io::statistics_json(random_stats)},
                        {"isa_better_median", better(isa_row.stats.median, random_stats.median,
                                                     objective.spec().direction)}});
  }

  if (cfg.format == "csv") return csv.str();
  Json json{{"base_seed", cfg.seed}, {"sign", cfg.sign}, {"functions", rows}};
  return json.dump(2) + '\n';
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Infrasonic search optimizer and benchmark harness", "isa"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto* list = app.add_subcommand("list", "List the benchmark catalog");
  add_format(list, cfg);
  add_output(list, cfg);

  auto* run_cmd = app.add_subcommand("run", "Run the optimizer once on one function");
  add_fn(run_cmd, cfg, true, "Function id");
  add_run_options(run_cmd, cfg, true);
  add_format(run_cmd, cfg);
  add_output(run_cmd, cfg);

  auto* experiment = app.add_subcommand("experiment", "Repeated runs with summary statistics");
  add_fn(experiment, cfg, false, "Function id, comma separated list or 'all' (default)");
  add_run_options(experiment, cfg, true);
  add_format(experiment, cfg);
  add_output(experiment, cfg);
  experiment->add_flag("--verbose", cfg.verbose, "Include every run record in JSON output");

  auto* grid = app.add_subcommand("grid-search", "Choose rho by median final fitness");
  add_fn(grid, cfg, true, "Function id");
  add_run_options(grid, cfg, true);
  grid->add_option("--grid", cfg.grid, "Comma separated rho values")->delimiter(',');
  add_format(grid, cfg);
  add_output(grid, cfg);

  auto* baseline = app.add_subcommand("baseline", "Compare against uniform random search at equal budget");
  add_fn(baseline, cfg, true, "Function id, comma separated list or 'all'");
  add_run_options(baseline, cfg, true);
  add_format(baseline, cfg);
  add_output(baseline, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const ObjectiveRegistry& registry = builtin_registry();
  std::string text;
  try {
    if (list->parsed())
      text = list_command(registry, cfg);
    else if (run_cmd->parsed())
      text = run_command(registry, cfg);
    else if (experiment->parsed())
      text = experiment_command(registry, cfg);
    else if (grid->parsed())
      text = grid_command(registry, cfg);
    else
      text = baseline_command(registry, cfg);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }

  if (cfg.output.empty()) {
    out << text;
    return out ? kExitOk : kExitRuntime;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  file << text;
  if (!file) {
    err << "error: could not write " << cfg.output << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}

} // namespace isa::cli
