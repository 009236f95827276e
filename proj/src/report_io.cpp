#include "isa/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace isa::io {

std::string format_real(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

namespace {

Json bounds_json(const Bounds& bounds) {
  Json out = Json::array();
  for (const auto& b : bounds) out.push_back(Json::array({b.lower, b.upper}));
  return out;
}

std::string bounds_text(const Bounds& bounds) {
  const bool uniform = std::all_of(bounds.begin(), bounds.end(),
                                   [&](const Interval& b) { return b == bounds.front(); });
  std::ostringstream out;
  auto interval = [&](const Interval& b) { out << '[' << b.lower << ';' << b.upper << ']'; };
  if (uniform) {
    interval(bounds.front());
    out << '^' << bounds.size();
  } else {
    for (std::size_t i = 0; i < bounds.size(); ++i) {
      if (i) out << 'x';
      interval(bounds[i]);
    }
  }
  return out.str();
}

double parse_real(const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || (errno == ERANGE && std::isinf(value)))
    throw std::runtime_error("malformed number '" + text + "'");
  return value;
}

} // namespace

Json catalog_json(const ObjectiveRegistry& registry) {
  Json out = Json::array();
  for (const auto& id : registry.ids()) {
    const auto& spec = registry.spec_of(id);
    Json entry;
    entry["id"] = spec.id;
    entry["dimension"] = spec.dimension;
    entry["bounds"] = bounds_json(spec.bounds);
    entry["direction"] = to_string(spec.direction);
    entry["defaults"] = {{"population", spec.default_population},
                         {"iterations", spec.default_iterations}};
    entry["known_optimum"] = spec.known_optimum ? Json(*spec.known_optimum) : Json(nullptr);
    out.push_back(std::move(entry));
  }
  return out;
}

void write_catalog_csv(std::ostream& out, const ObjectiveRegistry& registry) {
  out << "id,dimension,bounds,direction,population,iterations,known_optimum\n";
  for (const auto& id : registry.ids()) {
    const auto& spec = registry.spec_of(id);
    out << spec.id << ',' << spec.dimension << ',' << bounds_text(spec.bounds) << ','
        << to_string(spec.direction) << ',' << spec.default_population << ','
        << spec.default_iterations << ','
        << (spec.known_optimum ? format_real(*spec.known_optimum) : std::string()) << '\n';
  }
}

Json run_record_json(const RunRecord& record, bool timing) {
  Json out;
  out["function_id"] = record.function_id;
  out["seed"] = record.seed;
  out["rho"] = record.rho;
  out["best_fitness"] = record.best_fitness;
  out["best_position"] = record.best_position;
  out["trajectory"] = record.trajectory;
  if (timing) out["elapsed_ms"] = record.elapsed.count();
  return out;
}

RunRecord run_record_from_json(const Json& json) {
  RunRecord record;
  record.function_id = json.at("function_id").get<std::string>();
  record.seed = json.at("seed").get<std::uint64_t>();
  record.rho = json.at("rho").get<double>();
  record.best_fitness = json.at("best_fitness").get<double>();
  record.best_position = json.at("best_position").get<std::vector<double>>();
  record.trajectory = json.at("trajectory").get<std::vector<double>>();
  if (json.contains("elapsed_ms"))
    record.elapsed = std::chrono::duration<double, std::milli>(json.at("elapsed_ms").get<double>());
  return record;
}

Json statistics_json(const Statistics& stats) {
  return Json{{"mean", stats.mean},     {"median", stats.median}, {"best", stats.best},
              {"worst", stats.worst},   {"std", stats.stddev},    {"runs", stats.runs}};
}

Json grid_search_json(const GridSearchResult& result) {
  Json table = Json::array();
  for (const auto& point : result.table) {
    Json row{{"rho", point.rho}};
    row.update(statistics_json(point.stats));
    table.push_back(std::move(row));
  }
  return Json{{"function_id", result.function_id}, {"best_rho", result.best_rho}, {"table", table}};
}

Json report_json(const ExperimentReport& report, bool verbose, bool timing) {
  Json out;
  out["base_seed"] = report.base_seed;
  out["sign"] = to_string(report.sign);
  Json functions = Json::array();
  for (const auto& row : report.functions) {
    Json entry{{"id", row.function_id}, {"rho", row.rho}};
    entry.update(statistics_json(row.stats));
    if (row.grid) entry["grid_search"] = grid_search_json(*row.grid);
    if (timing) entry["runtime_ms"] = row.runtime_ms;
    if (verbose && !row.records.empty()) {
      Json runs = Json::array();
      for (const auto& record : row.records) runs.push_back(run_record_json(record, timing));
      entry["records"] = std::move(runs);
    }
    functions.push_back(std::move(entry));
  }
  out["functions"] = std::move(functions);
  if (timing) out["total_runtime_ms"] = report.total_runtime_ms;
  return out;
}

namespace {

void write_stats_row(std::ostream& out, const std::string& id, double rho, const Statistics& s) {
  out << id << ',' << format_real(rho) << ',' << format_real(s.mean) << ','
      << format_real(s.median) << ',' << format_real(s.best) << ',' << format_real(s.worst) << ','
      << format_real(s.stddev) << ',' << s.runs << '\n';
}

} // namespace

void write_report_csv(std::ostream& out, const ExperimentReport& report) {
  out << "# base_seed=" << report.base_seed << " sign=" << to_string(report.sign) << '\n';
  out << kReportCsvHeader << '\n';
  for (const auto& row : report.functions) write_stats_row(out, row.function_id, row.rho, row.stats);
}

void write_grid_csv(std::ostream& out, const GridSearchResult& result, std::uint64_t base_seed) {
  out << "# base_seed=" << base_seed << " best_rho=" << format_real(result.best_rho) << '\n';
  out << kReportCsvHeader << '\n';
  for (const auto& point : result.table)
    write_stats_row(out, result.function_id, point.rho, point.stats);
}

std::vector<ReportRow> parse_report_csv(std::istream& in) {
  std::vector<ReportRow> rows;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != kReportCsvHeader) throw std::runtime_error("unexpected CSV header '" + line + "'");
      header_seen = true;
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) fields.push_back(cell);
    if (fields.size() != 8) throw std::runtime_error("expected 8 CSV fields in '" + line + "'");
    ReportRow row;
    row.id = fields[0];
    row.rho = parse_real(fields[1]);
    row.stats.mean = parse_real(fields[2]);
    row.stats.median = parse_real(fields[3]);
    row.stats.best = parse_real(fields[4]);
    row.stats.worst = parse_real(fields[5]);
    row.stats.stddev = parse_real(fields[6]);
    std::size_t used = 0;
    row.stats.runs = std::stoul(fields[7], &used);
    if (used != fields[7].size()) throw std::runtime_error("malformed run count '" + fields[7] + "'");
    rows.push_back(std::move(row));
  }
  if (!header_seen) throw std::runtime_error("missing CSV header");
  return rows;
}

} // namespace isa::io
