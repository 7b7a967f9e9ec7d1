#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"
#include "lcycle/bench.hpp"
#include "support.hpp"

using namespace lcycle;
using namespace lcycle::testing;

namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + 1))
    ++n;
  return n;
}

std::string dot_of(const Graph& g, const Cycle& c) {
  std::ostringstream out;
  export_cycle_dot(g, c, out);
  return out.str();
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "lcycle_bench_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::filesystem::path write_file(const std::string& name,
                                 const std::string& text) {
  auto path = scratch_dir() / name;
  std::ofstream(path) << text;
  return path;
}

int run_cli(const std::string& args) {
  std::string cmd =
      std::string(LCYCLE_CLI) + " " + args + " >/dev/null 2>/dev/null";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

AggregateReport fake_report(const std::string& name, std::size_t best) {
  AggregateReport r;
  r.instance = name;
  RunRecord rec;
  rec.report.best_length = best;
  r.runs.push_back(rec);
  r.best_length = best;
  r.successes = 1;
  r.success_rate = 1.0;
  r.mean_generations = 12.0;
  r.mean_wall_time = 0.25;
  return r;
}

}  // namespace

TEST_CASE("DOT export") {
  std::string tri = dot_of(triangle(), Cycle{{0, 1, 2}});
  CHECK(tri.rfind("graph G {", 0) == 0);
  CHECK(count_of(tri, "color=red") == 3);
  CHECK(count_of(tri, " -- ") == 3);

  std::string plain = dot_of(triangle(), Cycle{});
  CHECK(count_of(plain, "color=red") == 0);
  CHECK(count_of(plain, " -- ") == 3);

  std::string k4 = dot_of(complete(4), Cycle{{0, 1, 2}});
  CHECK(count_of(k4, "color=red") == 3);
  CHECK(count_of(k4, " -- ") == 6);
  // Sorted edge listing: {0,1} comes first, {2,3} last.
  CHECK(k4.find("\"0\" -- \"1\"") < k4.find("\"2\" -- \"3\""));

  std::ostringstream sink;
  CHECK_THROWS_AS(export_cycle_dot(path(3), Cycle{{0, 1, 2}}, sink),
                  InvalidCycleError);
}

TEST_CASE("summary table") {
  std::string empty = summarize({});
  CHECK(count_of(empty, "\n") == 1);
  CHECK(empty.find("graph") == 0);
  CHECK(empty.find("success") != std::string::npos);

  std::vector<AggregateReport> two{fake_report("zachary", 20),
                                   fake_report("lesmis", 49)};
  std::string table = summarize(two);
  CHECK(count_of(table, "\n") == 3);
  CHECK(table.find("lesmis") < table.find("zachary"));
  CHECK(table.find("1/1") != std::string::npos);

  auto rows = nlohmann::json::parse(summarize_json(two));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0]["graph"] == "lesmis");
  CHECK(rows[1]["cycle_length"] == 20);
}

TEST_CASE("experiments") {
  auto tri = write_file("triangle.txt", "0 1\n1 2\n2 0\n");
  ExperimentSpec spec;
  spec.input = tri;
  spec.algorithm = Algorithm::exact;
  spec.runs = 2;
  AggregateReport r = run_experiment(spec);
  CHECK(r.instance == "triangle");
  CHECK(r.best_length == 3);
  CHECK(r.success_rate == 1.0);

  spec.runs = 0;
  CHECK_THROWS_AS(spec.validate(), ConfigError);
  spec.runs = 1;
  spec.algorithm = Algorithm::msls_iii;
  spec.restarts = 0;
  CHECK_THROWS_AS(spec.validate(), ConfigError);
}

TEST_CASE("reports are reproducible apart from timing") {
  std::mt19937_64 gen(5);
  Graph g = random_connected(25, 0.12, gen);
  for (auto algo : {Algorithm::anth_ls, Algorithm::msls_iv}) {
    ExperimentSpec spec;
    spec.instance_name = "random25";
    spec.algorithm = algo;
    spec.runs = 3;
    spec.seed = 40;
    spec.restarts = 30;
    spec.trace = true;
    spec.config.max_generations = 40;
    AggregateReport a = run_experiment(g, spec);
    AggregateReport b = run_experiment(g, spec);
    std::string ja = report_json(a, g, false);
    CHECK(ja == report_json(b, g, false));

    auto j = nlohmann::json::parse(report_json(a, g));
    CHECK(j["runs"].size() == 3);
    CHECK(j["runs"][1]["seed"] == 41);
    CHECK(j["runs"][0].contains("wall_time_s"));
    CHECK(j["aggregate"]["best_length"] == a.best_length);
    CHECK(j["aggregate"]["success_rate"].get<double>() > 0.0);
    for (const auto& rec : a.runs) {
      CHECK(validate_cycle(g, rec.report.best_cycle).ok());
      CHECK(rec.report.best_length <= a.best_length);
    }
  }
}

TEST_CASE("reports list cycles with the file's vertex labels") {
  auto file = write_file("labelled.txt", "10 20\n20 30\n30 10\n30 40\n");
  ExperimentSpec spec;
  spec.input = file;
  spec.algorithm = Algorithm::msls_iii;
  spec.runs = 1;
  spec.restarts = 3;
  AggregateReport r = run_experiment(spec);
  Graph g = read_graph(file, GraphFormat::edgelist);
  auto j = nlohmann::json::parse(report_json(r, g));
  auto cycle = j["runs"][0]["cycle"];
  REQUIRE(cycle.size() == 3);
  for (const auto& label : cycle) CHECK(label != "40");
}

TEST_CASE("command line exit codes") {
  auto tri = write_file("cli_triangle.txt", "0 1\n1 2\n2 0\n");
  auto bad = write_file("cli_bad.txt", "0 1\nx y\n");
  auto big = write_file("cli_ring.txt", [] {
    std::string s;
    for (int i = 0; i < 20; ++i) {
      s += std::to_string(i) + " " + std::to_string((i + 1) % 20) + "\n";
    }
    return s;
  }());
  auto report = scratch_dir() / "cli_report.json";
  auto dot = scratch_dir() / "cli_cycle.dot";
  std::filesystem::remove(report);
  std::filesystem::remove(dot);

  CHECK(run_cli("--input " + tri.string() + " --algo exact --report " +
                report.string() + " --dot " + dot.string()) == 0);
  CHECK(std::filesystem::exists(report));
  CHECK(std::filesystem::exists(dot));
  CHECK(run_cli("--input " + tri.string() + " --runs 2 --max-gens 20") == 0);
  CHECK(run_cli("--input " + tri.string() + " --algo msls-iv --restarts 5") ==
        0);

  CHECK(run_cli("--input " + tri.string() + " --algo nope") == 1);
  CHECK(run_cli("--input " + tri.string() + " --runs 0") == 1);
  CHECK(run_cli("--input " + tri.string() + " --rho 2") == 1);
  CHECK(run_cli("--input " + tri.string() + " --format xml") == 1);
  CHECK(run_cli("--input " + big.string() + " --algo exact") == 1);
  CHECK(run_cli("--bogus-flag") == 1);

  CHECK(run_cli("--input /nonexistent/graph.txt") == 2);
  CHECK(run_cli("--input " + bad.string()) == 2);
  CHECK(run_cli("--input " + tri.string() + " --format dimacs") == 2);
}
