#include "dkp/reducer.hpp"

#include <algorithm>
#include <stdexcept>

#include "greedy_core.hpp"

namespace dkp {

namespace {

// Entries for one group with its third item excluded. Slot 1 can now only be
// dominated through slot 2, so a single test decides it; slot 2 is the top
// item and is never dominated, even if it was before.
std::array<IncrementalKp::Entry, 3> audit_entries(const MckpView& view, uint32_t group) {
  const uint64_t c1 = view.profit(group, 1), c2 = view.profit(group, 2);
  const uint64_t a1 = view.weight(group, 1), a2 = view.weight(group, 2);
  const bool first_dominated = (c2 - c1) * a1 >= c1 * (a2 - a1);

  std::array<IncrementalKp::Entry, 3> e{};
  if (!first_dominated) {
    e[0] = {static_cast<uint32_t>(c1), static_cast<uint32_t>(a1), true};
  }
  e[1] = {static_cast<uint32_t>(c2 - e[0].profit), static_cast<uint32_t>(a2 - e[0].weight),
          true};
  return e;
}

}  // namespace

FixationReport ub_fix(const DkpInstance& inst, const LpResult& lp) {
  FixationReport report;
  report.f0 = lp.f0;
  report.lb_best = lp.lb;
  report.x_best = lp.x;

  const uint32_t m = inst.group_count();
  const MckpView view(inst);
  IncrementalKp kp = lp.kp;  // scratch copy; entries are swapped per audit
  const std::vector<ItemRef>& base_order = kp.order;

  std::vector<ItemRef> merged;
  merged.reserve(base_order.size() + 2);

  for (uint32_t i = 0; i < m; ++i) {
    if (!lp.levels[i][2].is_one()) continue;  // only groups whose third item is at level 1

    const std::array<IncrementalKp::Entry, 3> saved = kp.entries[i];
    kp.entries[i] = audit_entries(view, i);

    // Weave the group's rebuilt entries into the ranking; everything else
    // keeps its position.
    std::array<ItemRef, 2> pending{};
    size_t pending_count = 0;
    for (uint8_t slot = 1; slot <= 2; ++slot) {
      if (kp.entries[i][slot - 1].alive) pending[pending_count++] = {i, slot};
    }
    // Alive slot 1 always outranks slot 2 here (slot 1 survives only when its
    // efficiency strictly exceeds the increment to slot 2).
    merged.clear();
    size_t pi = 0;
    for (const ItemRef& ref : base_order) {
      if (ref.group == i) continue;
      while (pi < pending_count &&
             ranks_before(kp.entry(pending[pi].group, pending[pi].slot), pending[pi],
                          kp.entry(ref.group, ref.slot), ref)) {
        merged.push_back(pending[pi++]);
      }
      merged.push_back(ref);
    }
    while (pi < pending_count) merged.push_back(pending[pi++]);

    const detail::GreedyOutcome out = detail::greedy_fill(view, kp, merged, inst.capacity);

    GroupAudit audit;
    audit.group = i;
    audit.ubar_i = out.ubar;
    audit.lb_i = out.lb;
    if (out.lb >= report.lb_best) {
      report.lb_best = out.lb;
      report.x_best = detail::solution_from_slots(inst, out.x_slots);
    }
    if (out.ubar.floor() <= static_cast<uint64_t>(report.lb_best)) {
      report.f1.push_back(i);
      audit.fixed = true;
    }
    audit.lb_best_after = report.lb_best;
    report.audits.push_back(audit);

    kp.entries[i] = saved;
  }
  return report;
}

ReducedInstance apply_fixations(const DkpInstance& inst, const FixationReport& report,
                                bool use_f0, bool use_f1) {
  const uint32_t m = inst.group_count();

  std::vector<uint8_t> masks(m, 0b111);
  if (use_f0) {
    for (const ItemRef& ref : report.f0) masks[ref.group] &= ~(1u << (ref.slot - 1));
  }
  std::vector<bool> pinned(m, false);
  if (use_f1) {
    for (uint32_t g : report.f1) pinned[g] = true;
  }

  ReducedInstance red;
  red.orig_groups = m;
  red.orig_capacity = inst.capacity;
  for (uint32_t g = 0; g < m; ++g) {
    if (pinned[g]) {
      red.fixed_groups.push_back(g);
      red.value_offset += inst.profit(g, 2);
      red.weight_offset += inst.weight(g, 2);
      continue;
    }
    red.orig_group.push_back(g);
    red.masks.push_back(masks[g]);
    for (uint32_t k = 0; k < 3; ++k) {
      red.profits.push_back(inst.profit(g, k));
      red.weights.push_back(inst.weight(g, k));
    }
  }
  if (static_cast<uint64_t>(red.weight_offset) > inst.capacity) {
    throw std::logic_error("pinned groups exceed the capacity");
  }
  red.capacity = inst.capacity - static_cast<uint64_t>(red.weight_offset);
  return red;
}

}  // namespace dkp
