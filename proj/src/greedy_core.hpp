#pragma once

#include <cstdint>
#include <vector>

#include "dkp/instance.hpp"
#include "dkp/lp.hpp"

namespace dkp::detail {

/// Outcome of one greedy pass over a ranked incremental-item order:
/// the exact relaxation value, the feasible-solution value, and the
/// per-group slot assignments before (relaxation) and after (feasible
/// solution) the fill step.
struct GreedyOutcome {
  UpperBound ubar;
  int64_t lb = 0;
  std::vector<uint8_t> lp_slots;  // slot per group when the capacity ran out (0 = none)
  std::vector<uint8_t> x_slots;   // slot per group after filling unselected groups
  bool has_fraction = false;
  ItemRef fraction{};
  uint32_t fraction_num = 0;  // fractional level of the break item, reduced
  uint32_t fraction_den = 1;
  uint8_t prior_slot = 0;  // slot held by the break item's group, 0 if none
};

/// Takes items whole while they fit (an exact fit is taken whole); the first
/// item that does not fit becomes the fractional one and closes the
/// relaxation. The fill step then walks the remaining order and inserts whole
/// items (full profit, full weight) into groups that hold nothing, against
/// the feasible solution's residual capacity.
GreedyOutcome greedy_fill(const MckpView& view, const IncrementalKp& kp,
                          const std::vector<ItemRef>& order, uint64_t capacity);

Solution solution_from_slots(const DkpInstance& inst, const std::vector<uint8_t>& slots);

}  // namespace dkp::detail
