#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "dkp/dp.hpp"
#include "dkp/instance.hpp"

namespace dkp {

/// Solve pipelines. Full and Red return the true optimum; the others trade
/// exactness for speed: LpDom and RedLpDom run the DP on a problem with
/// dominated items masked out, Heuristic skips the DP entirely and returns
/// the audit incumbent.
enum class Method { Full, Red, LpDom, RedLpDom, Heuristic };

const char* method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

struct SolveOptions {
  bool want_solution = true;
  DpOptions dp;
};

struct SolveReport {
  Method method = Method::Full;
  int64_t value = 0;
  bool optimal = false;   // exact pipeline, not a heuristic label
  int64_t lb = 0;         // best preprocessing lower bound (= value for Full)
  int64_t ub_floor = 0;   // floor of the relaxation bound (= value for Full)
  double lpdom_pct = 0;   // dominated items as % of 3m
  double red_pct = 0;     // pinned groups as % of m
  double combined_pct = 0;  // variables decided by either rule, % of 3m
  double pre_ms = 0;
  double dp_ms = 0;
  double total_ms = 0;
  std::optional<Solution> solution;
};

SolveReport solve(const DkpInstance& inst, Method method, const SolveOptions& opts = {});

/// JSON object mirroring every report field; numbers round-trip exactly.
std::string report_to_json(const SolveReport& report);

/// Multi-line human-readable rendering.
std::string report_to_text(const SolveReport& report);

}  // namespace dkp
