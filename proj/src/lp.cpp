#include "dkp/lp.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "greedy_core.hpp"

namespace dkp {

DominanceFlags classify_dominance(const MckpView& view, uint32_t group) {
  // All quantities fit u32, so every cross product below fits u64 exactly.
  const uint64_t c1 = view.profit(group, 1), c2 = view.profit(group, 2),
                 c3 = view.profit(group, 3);
  const uint64_t a1 = view.weight(group, 1), a2 = view.weight(group, 2),
                 a3 = view.weight(group, 3);

  DominanceFlags flags;
  // Slot 1 is dominated by (dummy, slot 2) or by (dummy, slot 3).
  flags.first = (c2 - c1) * a1 >= c1 * (a2 - a1) || (c3 - c1) * a1 >= c1 * (a3 - a1);
  // Slot 2 is dominated by (slot 1, slot 3) or by (dummy, slot 3).
  flags.second =
      (c3 - c2) * (a2 - a1) >= (c2 - c1) * (a3 - a2) || (c3 - c2) * a2 >= c2 * (a3 - a2);
  return flags;
}

double IncrementalKp::efficiency(uint32_t group, uint8_t slot) const {
  const Entry& e = entry(group, slot);
  if (!e.alive) return -std::numeric_limits<double>::infinity();
  return static_cast<double>(e.profit) / static_cast<double>(e.weight);
}

bool ranks_before(const IncrementalKp::Entry& a, const ItemRef& ra,
                  const IncrementalKp::Entry& b, const ItemRef& rb) {
  const uint64_t lhs = static_cast<uint64_t>(a.profit) * b.weight;
  const uint64_t rhs = static_cast<uint64_t>(b.profit) * a.weight;
  if (lhs != rhs) return lhs > rhs;
  if (ra.slot != rb.slot) return ra.slot > rb.slot;
  return ra.group < rb.group;
}

std::array<IncrementalKp::Entry, 3> increment_entries(const MckpView& view, uint32_t group,
                                                      DominanceFlags flags) {
  const uint32_t c1 = view.profit(group, 1), c2 = view.profit(group, 2),
                 c3 = view.profit(group, 3);
  const uint32_t a1 = view.weight(group, 1), a2 = view.weight(group, 2),
                 a3 = view.weight(group, 3);

  std::array<IncrementalKp::Entry, 3> e{};
  if (!flags.first) e[0] = {c1, a1, true};
  if (flags.second) {
    // Slot 3 increments over the surviving slot below it: slot 1 or the dummy.
    e[2] = {c3 - e[0].profit, a3 - e[0].weight, true};
  } else {
    e[1] = {c2 - e[0].profit, a2 - e[0].weight, true};
    e[2] = {c3 - c2, a3 - a2, true};
  }
  return e;
}

BuildResult build_incremental_kp(const MckpView& view) {
  BuildResult out;
  const uint32_t m = view.group_count();
  out.kp.entries.resize(m);
  out.kp.order.reserve(3 * m);

  for (uint32_t g = 0; g < m; ++g) {
    const DominanceFlags flags = classify_dominance(view, g);
    out.kp.entries[g] = increment_entries(view, g, flags);
    if (flags.first) out.dominated.push_back({g, 1});
    if (flags.second) out.dominated.push_back({g, 2});
    for (uint8_t slot = 1; slot <= 3; ++slot) {
      if (out.kp.entries[g][slot - 1].alive) out.kp.order.push_back({g, slot});
    }
  }

  std::sort(out.kp.order.begin(), out.kp.order.end(),
            [&kp = out.kp](const ItemRef& a, const ItemRef& b) {
              return ranks_before(kp.entry(a.group, a.slot), a, kp.entry(b.group, b.slot), b);
            });
  return out;
}

namespace detail {

GreedyOutcome greedy_fill(const MckpView& view, const IncrementalKp& kp,
                          const std::vector<ItemRef>& order, uint64_t capacity) {
  GreedyOutcome out;
  const uint32_t m = view.group_count();
  out.lp_slots.assign(m, 0);

  uint64_t value = 0;
  uint64_t remaining = capacity;
  size_t pos = 0;
  for (; pos < order.size(); ++pos) {
    const ItemRef ref = order[pos];
    const IncrementalKp::Entry& e = kp.entry(ref.group, ref.slot);
    if (e.weight <= remaining) {
      value += e.profit;
      remaining -= e.weight;
      out.lp_slots[ref.group] = ref.slot;  // upgrades the group's earlier slot
    } else {
      out.has_fraction = true;
      out.fraction = ref;
      out.prior_slot = out.lp_slots[ref.group];
      out.ubar =
          UpperBound::with_fraction(value, checked_mul_u64(remaining, e.profit), e.weight);
      const uint64_t g = std::gcd(remaining, static_cast<uint64_t>(e.weight));
      out.fraction_num = static_cast<uint32_t>(remaining / g);
      out.fraction_den = static_cast<uint32_t>(e.weight / g);
      ++pos;
      break;
    }
  }
  if (!out.has_fraction) out.ubar = UpperBound(value);
  out.lb = static_cast<int64_t>(value);

  // Fill: whole items into groups holding nothing, in the same ranking.
  out.x_slots = out.lp_slots;
  for (; pos < order.size(); ++pos) {
    const ItemRef ref = order[pos];
    if (out.x_slots[ref.group] != 0) continue;
    const uint64_t w = view.weight(ref.group, ref.slot);
    if (w <= remaining) {
      out.x_slots[ref.group] = ref.slot;
      out.lb += view.profit(ref.group, ref.slot);
      remaining -= w;
    }
  }
  return out;
}

Solution solution_from_slots(const DkpInstance& inst, const std::vector<uint8_t>& slots) {
  std::vector<int8_t> selection(slots.size(), -1);
  for (size_t i = 0; i < slots.size(); ++i) {
    if (slots[i] != 0) selection[i] = static_cast<int8_t>(slots[i] - 1);
  }
  return evaluate(inst, selection);
}

}  // namespace detail

LpResult lp_greedy(const DkpInstance& inst) {
  const MckpView view(inst);
  BuildResult built = build_incremental_kp(view);

  LpResult result;
  result.f0 = std::move(built.dominated);
  result.kp = std::move(built.kp);

  const detail::GreedyOutcome out =
      detail::greedy_fill(view, result.kp, result.kp.order, inst.capacity);
  result.ubar = out.ubar;
  result.lb = out.lb;
  result.x = detail::solution_from_slots(inst, out.x_slots);

  result.levels.assign(inst.group_count(), {});
  for (uint32_t g = 0; g < inst.group_count(); ++g) {
    if (out.lp_slots[g] != 0) result.levels[g][out.lp_slots[g] - 1] = {1, 1};
  }
  if (out.has_fraction) {
    result.levels[out.fraction.group][out.fraction.slot - 1] = {out.fraction_num,
                                                                out.fraction_den};
    if (out.prior_slot != 0) {
      result.levels[out.fraction.group][out.prior_slot - 1] = {
          out.fraction_den - out.fraction_num, out.fraction_den};
    }
  }
  return result;
}

}  // namespace dkp
