#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "isa/report_io.hpp"

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = isa::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("list") {
  const auto json = invoke({"list"});
  REQUIRE(json.code == 0);
  const auto catalog = isa::io::Json::parse(json.out);
  REQUIRE(catalog.size() == 23);
  CHECK(catalog.at(0).at("id") == "F1");
  CHECK(catalog.at(0).at("dimension") == 30);
  CHECK(catalog.at(0).at("bounds").at(29) == isa::io::Json::array({-100.0, 100.0}));

  const auto csv = invoke({"list", "--format", "csv"});
  REQUIRE(csv.code == 0);
  std::istringstream lines(csv.out);
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  CHECK(header == "id,dimension,bounds,direction,population,iterations,known_optimum");
  CHECK(first == "F1,30,[-100;100]^30,minimise,50,1000,0");
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 24);
}

TEST_CASE("run output is byte-identical across invocations") {
  const std::vector<std::string> args{"run", "--fn", "F17", "--seed", "7", "--rho", "40"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto json = isa::io::Json::parse(a.out);
  CHECK(json.at("function_id") == "F17");
  CHECK(json.at("seed") == 7);
  CHECK(json.at("rho") == 40.0);
  CHECK(json.at("sign") == "attract");
  CHECK(json.at("trajectory").size() == 500);
  CHECK_FALSE(json.contains("elapsed_ms"));
  CHECK(invoke({"run", "--fn", "F17", "--seed", "7", "--rho", "40", "--timing"}).out.find("elapsed_ms") !=
        std::string::npos);
}

TEST_CASE("run grid-searches rho when it is not given") {
  const auto r = invoke({"run", "--fn", "F18", "--iterations", "10", "--grid-runs", "2"});
  REQUIRE(r.code == 0);
  const auto json = isa::io::Json::parse(r.out);
  CHECK(json.at("seed") == 42);
  CHECK(json.at("grid_search").at("table").size() == 12);
  CHECK(json.at("rho") == json.at("grid_search").at("best_rho"));
}

TEST_CASE("experiment CSV shape") {
  const auto r = invoke({"experiment", "--fn", "all", "--runs", "3", "--seed", "1", "--format", "csv",
                         "--iterations", "3", "--population", "4", "--grid-runs", "1"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  const auto rows = isa::io::parse_report_csv(in);
  REQUIRE(rows.size() == 23);
  CHECK(rows.front().id == "F1");
  CHECK(rows.back().id == "F23");
  for (const auto& row : rows) CHECK(row.stats.runs == 3);
  CHECK(r.out.rfind("# base_seed=1 sign=attract\nid,rho,mean,median,best,worst,std,runs\n", 0) == 0);
  const auto again = invoke({"experiment", "--fn", "all", "--runs", "3", "--seed", "1", "--format", "csv",
                             "--iterations", "3", "--population", "4", "--grid-runs", "1"});
  CHECK(again.out == r.out);
}

TEST_CASE("experiment JSON with verbose records") {
  const auto r = invoke({"experiment", "--fn", "F16,F17", "--runs", "2", "--rho", "20", "--iterations", "4",
                         "--verbose", "--sign", "literal"});
  REQUIRE(r.code == 0);
  const auto json = isa::io::Json::parse(r.out);
  CHECK(json.at("base_seed") == 42);
  CHECK(json.at("sign") == "literal");
  REQUIRE(json.at("functions").size() == 2);
  CHECK(json.at("functions").at(1).at("records").size() == 2);
  CHECK(json.at("functions").at(1).at("records").at(1).at("seed") == 43);
}

TEST_CASE("grid-search and baseline subcommands") {
  const auto grid = invoke({"grid-search", "--fn", "F14", "--grid", "10,50", "--runs", "2", "--iterations",
                            "5", "--format", "csv"});
  REQUIRE(grid.code == 0);
  std::istringstream in(grid.out);
  const auto rows = isa::io::parse_report_csv(in);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].rho == 10);
  CHECK(rows[1].rho == 50);

  const auto baseline = invoke({"baseline", "--fn", "F1", "--runs", "2", "--rho", "30", "--iterations", "5",
                                "--population", "6"});
  REQUIRE(baseline.code == 0);
  const auto json = isa::io::Json::parse(baseline.out);
  const auto& row = json.at("functions").at(0);
  CHECK(row.at("budget") == 30);
  CHECK(row.at("isa").at("runs") == 2);
  CHECK(row.at("random").at("runs") == 2);
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "isa_cli_list_test.json";
  std::filesystem::remove(path);
  const auto r = invoke({"list", "-o", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream file(path);
  std::stringstream content;
  content << file.rdbuf();
  CHECK(isa::io::Json::parse(content.str()).size() == 23);
  std::filesystem::remove(path);

  const auto bad = invoke({"list", "-o", "/nonexistent-dir/x/y.json"});
  CHECK(bad.code == 1);
}

TEST_CASE("argument errors exit with 2") {
  const std::vector<std::vector<std::string>> cases{
      {},
      {"frobnicate"},
      {"run"},
      {"run", "--fn", "F99"},
      {"run", "--fn", "F1,F2", "--rho", "5"},
      {"run", "--fn", "F1", "--rho", "150"},
      {"run", "--fn", "F1", "--rho", "abc"},
      {"run", "--fn", "F1", "--format", "csv", "--rho", "5"},
      {"experiment", "--fn", "F1,nope"},
      {"experiment", "--format", "xml"},
      {"experiment", "--runs", "0"},
      {"experiment", "--sign", "sideways"},
      {"grid-search", "--fn", "F1", "--grid", "10,200"},
      {"baseline"},
      {"list", "--bogus"},
  };
  for (const auto& args : cases) {
    std::string joined;
    for (const auto& a : args) joined += a + ' ';
    CAPTURE(joined);
    const auto r = invoke(args);
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("help exits cleanly") {
  const auto r = invoke({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("experiment") != std::string::npos);
}
