#include "dkp/bench.hpp"

#include <algorithm>
#include <filesystem>
#include <future>
#include <iomanip>
#include <map>
#include <ostream>

#include "dkp/generator.hpp"

namespace dkp {

namespace {

namespace fs = std::filesystem;

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::vector<BenchRow> run_instance(const std::string& path, const BenchOptions& opts) {
  const LoadResult loaded = load_instance(path);
  const DkpInstance& inst = loaded.instance;

  std::vector<BenchRow> rows;
  std::optional<int64_t> opt = read_opt_sidecar(path);
  for (Method method : opts.methods) {
    BenchRow row;
    row.instance = fs::path(path).stem().string();
    row.family = family_from_filename(row.instance);
    row.m = inst.group_count();
    row.b = inst.capacity;

    std::vector<double> pre, dp, total;
    for (int r = 0; r < std::max(1, opts.repeat); ++r) {
      SolveReport rep = solve(inst, method, opts.solve);
      pre.push_back(rep.pre_ms);
      dp.push_back(rep.dp_ms);
      total.push_back(rep.total_ms);
      if (r == 0) row.report = std::move(rep);
    }
    row.report.pre_ms = median(pre);
    row.report.dp_ms = median(dp);
    row.report.total_ms = median(total);

    if (!opt && row.report.optimal) {
      opt = row.report.value;
      if (opts.write_opt) write_opt_sidecar(path, *opt);
    }
    rows.push_back(std::move(row));
  }
  for (BenchRow& row : rows) {
    row.opt = opt;
    if (opt && *opt != 0) {
      row.gap_pct = 100.0 * static_cast<double>(*opt - row.report.value) /
                    static_cast<double>(*opt);
    }
  }
  return rows;
}

struct Aggregate {
  size_t count = 0;
  double value = 0, optimal = 0, lb = 0, ub_floor = 0;
  double lpdom = 0, red = 0, combined = 0;
  double pre = 0, dp = 0, total = 0;
  double gap = 0;
  size_t gap_count = 0;
  double m = 0, b = 0;

  void add(const BenchRow& row) {
    ++count;
    value += static_cast<double>(row.report.value);
    optimal += row.report.optimal ? 1.0 : 0.0;
    lb += static_cast<double>(row.report.lb);
    ub_floor += static_cast<double>(row.report.ub_floor);
    lpdom += row.report.lpdom_pct;
    red += row.report.red_pct;
    combined += row.report.combined_pct;
    pre += row.report.pre_ms;
    dp += row.report.dp_ms;
    total += row.report.total_ms;
    m += row.m;
    b += static_cast<double>(row.b);
    if (row.gap_pct) {
      gap += *row.gap_pct;
      ++gap_count;
    }
  }
};

void write_row(std::ostream& out, const BenchRow& row) {
  out << row.instance << ',' << row.family << ',' << row.m << ',' << row.b << ','
      << method_name(row.report.method) << ',' << row.report.value << ','
      << (row.report.optimal ? 1 : 0) << ',' << row.report.lb << ',' << row.report.ub_floor
      << ',' << row.report.lpdom_pct << ',' << row.report.red_pct << ','
      << row.report.combined_pct << ',' << row.report.pre_ms << ',' << row.report.dp_ms << ','
      << row.report.total_ms << ',';
  if (row.gap_pct) out << *row.gap_pct;
  out << '\n';
}

void write_aggregate(std::ostream& out, const std::string& family, const std::string& method,
                     const Aggregate& agg) {
  const double n = static_cast<double>(agg.count);
  out << "mean," << family << ',' << agg.m / n << ',' << agg.b / n << ',' << method << ','
      << agg.value / n << ',' << agg.optimal / n << ',' << agg.lb / n << ','
      << agg.ub_floor / n << ',' << agg.lpdom / n << ',' << agg.red / n << ','
      << agg.combined / n << ',' << agg.pre / n << ',' << agg.dp / n << ',' << agg.total / n
      << ',';
  if (agg.gap_count > 0) out << agg.gap / static_cast<double>(agg.gap_count);
  out << '\n';
}

}  // namespace

BenchResult bench_directory(const std::string& dir, const BenchOptions& opts) {
  std::vector<std::string> paths;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".dkp") {
      paths.push_back(entry.path().string());
    }
  }
  if (paths.empty()) {
    throw std::invalid_argument("no .dkp instances in " + dir);
  }
  std::sort(paths.begin(), paths.end());

  BenchResult result;
  if (opts.jobs <= 1) {
    for (const std::string& path : paths) {
      for (BenchRow& row : run_instance(path, opts)) result.rows.push_back(std::move(row));
    }
  } else {
    std::vector<std::future<std::vector<BenchRow>>> futures;
    futures.reserve(paths.size());
    for (const std::string& path : paths) {
      futures.push_back(
          std::async(std::launch::async, [&opts, path] { return run_instance(path, opts); }));
    }
    for (auto& fut : futures) {
      for (BenchRow& row : fut.get()) result.rows.push_back(std::move(row));
    }
  }
  return result;
}

void write_csv(std::ostream& out, const BenchResult& result) {
  out << "# dkp-bench csv v1\n";
  out << "instance,family,m,b,method,value,optimal,lb,ub_floor,lpdom_pct,red_pct,"
         "combined_pct,pre_ms,dp_ms,total_ms,gap_pct\n";
  out << std::setprecision(12);

  std::map<std::pair<std::string, std::string>, Aggregate> by_family;
  std::map<std::string, Aggregate> overall;
  for (const BenchRow& row : result.rows) {
    write_row(out, row);
    by_family[{row.family, method_name(row.report.method)}].add(row);
    overall[method_name(row.report.method)].add(row);
  }
  for (const auto& [key, agg] : by_family) {
    write_aggregate(out, key.first, key.second, agg);
  }
  for (const auto& [method, agg] : overall) {
    write_aggregate(out, "overall", method, agg);
  }
}

}  // namespace dkp
