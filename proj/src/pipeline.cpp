#include "dkp/pipeline.hpp"

#include <chrono>
#include <sstream>

#include "json.hpp"

#include "dkp/lp.hpp"
#include "dkp/reducer.hpp"

namespace dkp {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

double pct(uint64_t part, uint64_t whole) {
  return whole == 0 ? 0.0 : 100.0 * static_cast<double>(part) / static_cast<double>(whole);
}

// Red.+LP_Dom: all three variables of a pinned group are decided; on the
// remaining groups each dominated item is one decided variable.
double combined_pct(const DkpInstance& inst, const FixationReport& report) {
  const uint32_t m = inst.group_count();
  if (m == 0) return 0.0;
  std::vector<bool> pinned(m, false);
  for (uint32_t g : report.f1) pinned[g] = true;
  uint64_t decided = 3ull * report.f1.size();
  for (const ItemRef& ref : report.f0) {
    if (!pinned[ref.group]) ++decided;
  }
  return pct(decided, 3ull * m);
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::Full: return "full";
    case Method::Red: return "red";
    case Method::LpDom: return "lpdom";
    case Method::RedLpDom: return "red-lpdom";
    case Method::Heuristic: return "heuristic";
  }
  return "?";
}

std::optional<Method> method_from_name(std::string_view name) {
  if (name == "full") return Method::Full;
  if (name == "red") return Method::Red;
  if (name == "lpdom") return Method::LpDom;
  if (name == "red-lpdom") return Method::RedLpDom;
  if (name == "heuristic") return Method::Heuristic;
  return std::nullopt;
}

SolveReport solve(const DkpInstance& inst, Method method, const SolveOptions& opts) {
  SolveReport report;
  report.method = method;
  const auto t_total = Clock::now();

  if (method == Method::Full) {
    const auto t_dp = Clock::now();
    if (opts.want_solution) {
      Solution sol = dp_solve(inst, opts.dp);
      report.value = sol.value;
      report.solution = std::move(sol);
    } else {
      report.value = dp_value(inst, opts.dp);
    }
    report.dp_ms = ms_since(t_dp);
    report.optimal = true;
    report.lb = report.value;
    report.ub_floor = report.value;
    report.total_ms = ms_since(t_total);
    return report;
  }

  // Preprocessing: relaxation always; group audits except for pure LpDom.
  const auto t_pre = Clock::now();
  const LpResult lp = lp_greedy(inst);
  FixationReport fix;
  if (method == Method::LpDom) {
    fix.f0 = lp.f0;
    fix.lb_best = lp.lb;
    fix.x_best = lp.x;
  } else {
    fix = ub_fix(inst, lp);
  }
  const bool use_f0 = method == Method::LpDom || method == Method::RedLpDom;
  const bool use_f1 = method == Method::Red || method == Method::RedLpDom;
  ReducedInstance red;
  if (method != Method::Heuristic) red = apply_fixations(inst, fix, use_f0, use_f1);
  report.pre_ms = ms_since(t_pre);

  report.lb = fix.lb_best;
  report.ub_floor = static_cast<int64_t>(lp.ubar.floor());
  report.lpdom_pct = pct(fix.f0.size(), 3ull * inst.group_count());
  if (method != Method::LpDom) {
    report.red_pct = pct(fix.f1.size(), inst.group_count());
    report.combined_pct = combined_pct(inst, fix);
  } else {
    report.combined_pct = report.lpdom_pct;
  }

  if (method == Method::Heuristic) {
    report.value = fix.lb_best;
    if (opts.want_solution) report.solution = fix.x_best;
    report.total_ms = ms_since(t_total);
    return report;
  }

  const auto t_dp = Clock::now();
  if (opts.want_solution) {
    Solution sol = dp_solve(red, opts.dp);
    if (sol.value >= fix.lb_best) {
      report.value = sol.value;
      report.solution = std::move(sol);
    } else {
      report.value = fix.lb_best;
      report.solution = fix.x_best;
    }
  } else {
    report.value = std::max(dp_value(red, opts.dp), fix.lb_best);
  }
  report.dp_ms = ms_since(t_dp);

  report.optimal = method == Method::Red;
  report.total_ms = ms_since(t_total);
  return report;
}

std::string report_to_json(const SolveReport& report) {
  nlohmann::json j;
  j["method"] = method_name(report.method);
  j["value"] = report.value;
  j["optimal"] = report.optimal;
  j["lb"] = report.lb;
  j["ub_floor"] = report.ub_floor;
  j["lpdom_pct"] = report.lpdom_pct;
  j["red_pct"] = report.red_pct;
  j["combined_pct"] = report.combined_pct;
  j["pre_ms"] = report.pre_ms;
  j["dp_ms"] = report.dp_ms;
  j["total_ms"] = report.total_ms;
  if (report.solution) {
    nlohmann::json s;
    s["selection"] = report.solution->selection;
    s["value"] = report.solution->value;
    s["weight"] = report.solution->weight;
    s["feasible"] = report.solution->feasible;
    j["solution"] = std::move(s);
  }
  return j.dump(2);
}

std::string report_to_text(const SolveReport& report) {
  std::ostringstream out;
  out << "method    : " << method_name(report.method) << "\n";
  out << "value     : " << report.value << (report.optimal ? " (optimal)" : " (heuristic)")
      << "\n";
  out << "bounds    : lb=" << report.lb << " ub_floor=" << report.ub_floor << "\n";
  out << "fixations : lpdom " << report.lpdom_pct << "%  red " << report.red_pct
      << "%  combined " << report.combined_pct << "%\n";
  out << "time (ms) : pre " << report.pre_ms << "  dp " << report.dp_ms << "  total "
      << report.total_ms << "\n";
  if (report.solution) {
    out << "selection :";
    for (int8_t s : report.solution->selection) out << ' ' << static_cast<int>(s);
    out << "\n            value " << report.solution->value << ", weight "
        << report.solution->weight << ", "
        << (report.solution->feasible ? "feasible" : "infeasible") << "\n";
  }
  return out.str();
}

}  // namespace dkp
