#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "dkp/instance.hpp"
#include "dkp/rational.hpp"

namespace dkp {

/// Slot k (1..3) of a group in the four-slot view. Slot 0, the dummy, never
/// appears here.
struct ItemRef {
  uint32_t group = 0;
  uint8_t slot = 0;

  friend bool operator==(const ItemRef& a, const ItemRef& b) {
    return a.group == b.group && a.slot == b.slot;
  }
};

struct DominanceFlags {
  bool first = false;   // slot 1 can be zero in some optimum of the relaxation
  bool second = false;  // slot 2 likewise
};

/// Evaluates the two dominance tests per base item with exact integer
/// cross-multiplication; ratio ties count as dominated.
DominanceFlags classify_dominance(const MckpView& view, uint32_t group);

/// Profit/weight increments over the previous surviving slot of the group.
/// A dominated slot keeps a dead entry (zeros, efficiency -inf) and is
/// omitted from the order.
struct IncrementalKp {
  struct Entry {
    uint32_t profit = 0;
    uint32_t weight = 0;
    bool alive = false;
  };

  std::vector<std::array<Entry, 3>> entries;  // [group][slot-1]
  std::vector<ItemRef> order;                 // alive entries, efficiency-descending

  const Entry& entry(uint32_t group, uint8_t slot) const { return entries[group][slot - 1]; }
  double efficiency(uint32_t group, uint8_t slot) const;
};

/// Strict ordering used everywhere items are ranked: higher profit/weight
/// ratio first (compared exactly), ties broken by higher slot, then lower
/// group index.
bool ranks_before(const IncrementalKp::Entry& a, const ItemRef& ra,
                  const IncrementalKp::Entry& b, const ItemRef& rb);

/// Increment arithmetic for one group under the given dominance flags.
/// Exposed separately so the no-dominance formulas can be exercised on raw
/// slot data.
std::array<IncrementalKp::Entry, 3> increment_entries(const MckpView& view, uint32_t group,
                                                      DominanceFlags flags);

struct BuildResult {
  IncrementalKp kp;
  std::vector<ItemRef> dominated;  // F0: items fixable to zero in the relaxation
};

BuildResult build_incremental_kp(const MckpView& view);

/// x-bar level of one slot, an exact rational in [0,1] (reduced).
struct Rat32 {
  uint32_t num = 0;
  uint32_t den = 1;

  bool is_one() const { return num == den; }
  friend bool operator==(const Rat32& a, const Rat32& b) {
    return a.num == b.num && a.den == b.den;
  }
};

struct LpResult {
  std::vector<std::array<Rat32, 3>> levels;  // relaxation optimum, per (group, slot)
  UpperBound ubar;                           // relaxation value, exact
  int64_t lb = 0;                            // value of the greedy feasible solution
  Solution x;                                // the greedy feasible solution
  std::vector<ItemRef> f0;                   // dominated items
  IncrementalKp kp;                          // retained for the group-audit pass
};

/// Solves the LP relaxation greedily over the incremental items and builds a
/// feasible solution along the way. Guarantees lb <= optimum <= ubar; the
/// level vector has at most two fractional entries and they share a group.
LpResult lp_greedy(const DkpInstance& inst);

}  // namespace dkp
