#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dkp/pipeline.hpp"

namespace dkp {

struct BenchOptions {
  std::vector<Method> methods{Method::Full, Method::Red};
  int repeat = 1;        // time columns become medians over this many runs
  bool write_opt = false;  // exact methods write missing .opt sidecars
  unsigned jobs = 1;
  SolveOptions solve;
};

struct BenchRow {
  std::string instance;  // file stem
  std::string family;
  uint32_t m = 0;
  uint64_t b = 0;
  SolveReport report;
  std::optional<int64_t> opt;      // sidecar or derived from an exact method
  std::optional<double> gap_pct;   // 100*(opt-value)/opt when opt is known
};

struct BenchResult {
  std::vector<BenchRow> rows;  // ordered by instance name, then method order
};

/// Solves every *.dkp file in the directory with every requested method.
/// Throws std::invalid_argument when the directory holds no instances.
BenchResult bench_directory(const std::string& dir, const BenchOptions& opts);

/// CSV with a versioned header comment, one row per (instance, method), and
/// appended per-family / overall mean rows.
void write_csv(std::ostream& out, const BenchResult& result);

}  // namespace dkp
