#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "isa/algorithm.hpp"
#include "isa/harness.hpp"
#include "isa/objective.hpp"

// JSON and CSV encodings of catalogs, run records and experiment reports.
// Wall-clock fields are only written when `timing` is set so that repeated
// invocations produce byte-identical output.
namespace isa::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportCsvHeader = "id,rho,mean,median,best,worst,std,runs";

/// Shortest round-trip text for a double ("%.17g").
std::string format_real(double value);

Json catalog_json(const ObjectiveRegistry& registry);
void write_catalog_csv(std::ostream& out, const ObjectiveRegistry& registry);

/// {function_id, seed, rho, best_fitness, best_position, trajectory[, elapsed_ms]}
Json run_record_json(const RunRecord& record, bool timing = false);
RunRecord run_record_from_json(const Json& json);

Json statistics_json(const Statistics& stats);
Json grid_search_json(const GridSearchResult& result);
/// Per-run records are included when `verbose` is set and the report kept them.
Json report_json(const ExperimentReport& report, bool verbose = false, bool timing = false);

/// One comment line with the base seed and sign mode, the header, then one
/// row per function.
void write_report_csv(std::ostream& out, const ExperimentReport& report);
void write_grid_csv(std::ostream& out, const GridSearchResult& result, std::uint64_t base_seed);

struct ReportRow {
  std::string id;
  double rho = 0.0;
  Statistics stats;
};

/// Parses what write_report_csv emits. Lines starting with '#' are skipped.
/// Throws std::runtime_error on malformed input.
std::vector<ReportRow> parse_report_csv(std::istream& in);

} // namespace isa::io
