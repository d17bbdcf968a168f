#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "dkp/bench.hpp"
#include "dkp/generator.hpp"
#include "dkp/oracle.hpp"
#include "dkp/pipeline.hpp"
#include "fixtures.hpp"

using dkp::DkpInstance;
using dkp::Method;
using dkp::SolveReport;

namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const char* tag) : path(fs::temp_directory_path() / tag) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("every method solves the fixture") {
  const DkpInstance inst = dkptest::t2();

  const SolveReport full = dkp::solve(inst, Method::Full);
  CHECK(full.value == 30);
  CHECK(full.optimal);
  CHECK(full.lb == 30);
  CHECK(full.ub_floor == 30);

  const SolveReport red = dkp::solve(inst, Method::Red);
  CHECK(red.value == 30);
  CHECK(red.optimal);
  CHECK(red.red_pct == doctest::Approx(50.0));
  CHECK(red.lpdom_pct == doctest::Approx(100.0 * 4 / 6));
  CHECK(red.combined_pct == doctest::Approx(100.0 * 5 / 6));
  CHECK(red.ub_floor == 33);
  REQUIRE(red.solution.has_value());
  CHECK(red.solution->selection == std::vector<int8_t>{2, -1});

  const SolveReport lpdom = dkp::solve(inst, Method::LpDom);
  CHECK(lpdom.value == 30);
  CHECK_FALSE(lpdom.optimal);
  CHECK(lpdom.red_pct == 0.0);
  CHECK(lpdom.combined_pct == lpdom.lpdom_pct);

  const SolveReport both = dkp::solve(inst, Method::RedLpDom);
  CHECK(both.value == 30);
  CHECK_FALSE(both.optimal);

  const SolveReport heur = dkp::solve(inst, Method::Heuristic);
  CHECK(heur.value == 30);
  CHECK_FALSE(heur.optimal);  // heuristic label even when it lands on the optimum
  CHECK(heur.dp_ms == 0.0);
  REQUIRE(heur.solution.has_value());
  CHECK(heur.solution->value == 30);
}

TEST_CASE("value-only mode skips the witness") {
  dkp::SolveOptions opts;
  opts.want_solution = false;
  const SolveReport report = dkp::solve(dkptest::t2(), Method::Red, opts);
  CHECK(report.value == 30);
  CHECK_FALSE(report.solution.has_value());
}

TEST_CASE("exact and heuristic methods bracket the optimum on a corpus") {
  for (const DkpInstance& inst : dkptest::small_corpus(150, 2, 10, 1234)) {
    const int64_t opt = dkp::brute_force(inst).value;
    CHECK(dkp::solve(inst, Method::Full).value == opt);
    CHECK(dkp::solve(inst, Method::Red).value == opt);
    CHECK(dkp::solve(inst, Method::LpDom).value <= opt);
    CHECK(dkp::solve(inst, Method::RedLpDom).value <= opt);
    CHECK(dkp::solve(inst, Method::Heuristic).value <= opt);
  }
}

TEST_CASE("exact methods agree beyond oracle reach") {
  for (const DkpInstance& inst : dkptest::small_corpus(50, 15, 60, 5150)) {
    const SolveReport full = dkp::solve(inst, Method::Full);
    const SolveReport red = dkp::solve(inst, Method::Red);
    CHECK(full.value == red.value);
    CHECK(dkp::solve(inst, Method::LpDom).value <= full.value);
    CHECK(dkp::solve(inst, Method::Heuristic).value <= full.value);
  }
}

TEST_CASE("json output round-trips every numeric field") {
  const SolveReport report = dkp::solve(dkptest::t2(), Method::Red);
  const nlohmann::json j = nlohmann::json::parse(dkp::report_to_json(report));

  CHECK(j["method"] == "red");
  CHECK(j["value"].get<int64_t>() == report.value);
  CHECK(j["optimal"].get<bool>() == report.optimal);
  CHECK(j["lb"].get<int64_t>() == report.lb);
  CHECK(j["ub_floor"].get<int64_t>() == report.ub_floor);
  CHECK(j["lpdom_pct"].get<double>() == report.lpdom_pct);
  CHECK(j["red_pct"].get<double>() == report.red_pct);
  CHECK(j["combined_pct"].get<double>() == report.combined_pct);
  CHECK(j["pre_ms"].get<double>() == report.pre_ms);
  CHECK(j["dp_ms"].get<double>() == report.dp_ms);
  CHECK(j["total_ms"].get<double>() == report.total_ms);
  CHECK(j["solution"]["value"].get<int64_t>() == report.solution->value);
  CHECK(j["solution"]["weight"].get<int64_t>() == report.solution->weight);
  CHECK(j["solution"]["selection"].get<std::vector<int8_t>>() == report.solution->selection);
}

TEST_CASE("reports are deterministic apart from timings") {
  for (const DkpInstance& inst : dkptest::small_corpus(20, 2, 12, 4321)) {
    for (Method method : {Method::Full, Method::Red, Method::LpDom, Method::RedLpDom,
                          Method::Heuristic}) {
      const SolveReport a = dkp::solve(inst, method);
      const SolveReport b = dkp::solve(inst, method);
      CHECK(a.value == b.value);
      CHECK(a.lb == b.lb);
      CHECK(a.ub_floor == b.ub_floor);
      CHECK(a.lpdom_pct == b.lpdom_pct);
      CHECK(a.red_pct == b.red_pct);
      CHECK(a.combined_pct == b.combined_pct);
      CHECK(a.solution.has_value() == b.solution.has_value());
      if (a.solution) CHECK(a.solution->selection == b.solution->selection);
    }
  }
}

TEST_CASE("bench over a directory of generated instances") {
  TempDir dir("dkp_bench_test");
  dkp::GenSpec spec;
  spec.groups = 8;
  for (uint32_t i = 0; i < 8; ++i) {
    spec.family = i % 2 == 0 ? dkp::Family::Strong : dkp::Family::Weak;
    spec.seed = 100 + i;
    const std::string name =
        std::string(dkp::family_name(spec.family)) + "_8_" + std::to_string(i) + ".dkp";
    dkp::save_instance(dkp::generate(spec), (dir.path / name).string());
  }

  dkp::BenchOptions opts;
  opts.methods = {Method::Full, Method::Red};
  opts.write_opt = true;
  const dkp::BenchResult result = dkp::bench_directory(dir.path.string(), opts);
  REQUIRE(result.rows.size() == 16);

  for (size_t i = 0; i + 1 < result.rows.size(); i += 2) {
    const dkp::BenchRow& full_row = result.rows[i];
    const dkp::BenchRow& red_row = result.rows[i + 1];
    CHECK(full_row.instance == red_row.instance);
    CHECK(full_row.report.value == red_row.report.value);  // both exact
    REQUIRE(full_row.gap_pct.has_value());
    CHECK(*full_row.gap_pct == 0.0);
  }

  // write_opt dropped sidecars next to the instances.
  size_t sidecars = 0;
  for (const auto& entry : fs::directory_iterator(dir.path)) {
    if (entry.path().extension() == ".opt") ++sidecars;
  }
  CHECK(sidecars == 8);

  std::ostringstream csv;
  dkp::write_csv(csv, result);
  const std::string text = csv.str();
  CHECK(text.find("# dkp-bench csv v1\n") == 0);
  CHECK(text.find("instance,family,m,b,method,value,optimal,lb,ub_floor,lpdom_pct,red_pct,"
                  "combined_pct,pre_ms,dp_ms,total_ms,gap_pct\n") != std::string::npos);
  // 1 comment + 1 header + 16 data + (2 families x 2 methods + 2 overall) aggregates
  const size_t lines = static_cast<size_t>(std::count(text.begin(), text.end(), '\n'));
  CHECK(lines == 1 + 1 + 16 + 4 + 2);

  // Re-running against the sidecars keeps time-independent columns identical.
  const dkp::BenchResult again = dkp::bench_directory(dir.path.string(), opts);
  REQUIRE(again.rows.size() == result.rows.size());
  for (size_t i = 0; i < result.rows.size(); ++i) {
    CHECK(again.rows[i].instance == result.rows[i].instance);
    CHECK(again.rows[i].report.value == result.rows[i].report.value);
    CHECK(again.rows[i].opt == result.rows[i].opt);
  }
}

TEST_CASE("bench medians come from repeated runs") {
  TempDir dir("dkp_bench_repeat");
  dkp::save_instance(dkptest::t2(), (dir.path / "unc_2_0.dkp").string());
  dkp::BenchOptions opts;
  opts.methods = {Method::Red};
  opts.repeat = 3;
  const dkp::BenchResult result = dkp::bench_directory(dir.path.string(), opts);
  REQUIRE(result.rows.size() == 1);
  CHECK(result.rows[0].report.value == 30);
  CHECK(result.rows[0].report.total_ms >= 0.0);
}

TEST_CASE("bench rejects an empty directory") {
  TempDir dir("dkp_bench_empty");
  CHECK_THROWS_AS(dkp::bench_directory(dir.path.string(), dkp::BenchOptions{}),
                  std::invalid_argument);
}

TEST_CASE("parallel bench keeps deterministic row order") {
  TempDir dir("dkp_bench_jobs");
  dkp::GenSpec spec;
  spec.groups = 12;
  spec.family = dkp::Family::Uncorrelated;
  for (uint32_t i = 0; i < 6; ++i) {
    spec.seed = i;
    dkp::save_instance(dkp::generate(spec),
                       (dir.path / ("unc_12_" + std::to_string(i) + ".dkp")).string());
  }
  dkp::BenchOptions serial;
  serial.methods = {Method::Red};
  dkp::BenchOptions parallel = serial;
  parallel.jobs = 4;

  const auto a = dkp::bench_directory(dir.path.string(), serial);
  const auto b = dkp::bench_directory(dir.path.string(), parallel);
  REQUIRE(a.rows.size() == b.rows.size());
  for (size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].instance == b.rows[i].instance);
    CHECK(a.rows[i].report.value == b.rows[i].report.value);
  }
}
