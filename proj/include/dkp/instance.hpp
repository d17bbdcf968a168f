#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dkp {

/// A discounted 0-1 knapsack instance: m groups of three items, at most one
/// item selectable per group. Item k of group i sits at flat index 3*i+k.
/// The third item of a group bundles the first two:
///   c[3i+2] = c[3i] + c[3i+1]   and   a[3i+1] < a[3i+2] < a[3i] + a[3i+1].
///
/// Profits and weights are 32-bit; every accumulation (solution values,
/// weights, DP states) runs in 64-bit. Instances are immutable after
/// construction and safe to share across threads.
struct DkpInstance {
  uint64_t capacity = 0;
  std::vector<uint32_t> profits;  // size 3m
  std::vector<uint32_t> weights;  // size 3m

  uint32_t group_count() const { return static_cast<uint32_t>(profits.size() / 3); }
  uint32_t item_count() const { return static_cast<uint32_t>(profits.size()); }
  uint32_t profit(uint32_t group, uint32_t item) const { return profits[3 * group + item]; }
  uint32_t weight(uint32_t group, uint32_t item) const { return weights[3 * group + item]; }
};

struct Violation {
  int64_t group;  // -1 for instance-wide conditions
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the structural assumptions on a DKP instance and reports every
/// violation with its group index. Lenient mode checks positivity, the
/// per-group weight chain a0 < a1 < a2 < a0+a1 and the profit identities
/// c2 = c0+c1, c0 < c1 < c2. Strict mode adds the two non-triviality
/// capacity conditions: sum_i a[3i+2] > b and a[3i+2] <= b for every group.
/// Violations are reported, never thrown; callers decide what is fatal.
ValidationReport validate(const DkpInstance& inst, bool strict = false);

/// Four-slots-per-group view of an instance: slot 0 is a dummy item with
/// zero profit and zero weight, slots 1..3 map to items 0..2 of the group.
/// Pure index remapping over the underlying instance (no copies); the view
/// must not outlive the instance it was built from.
class MckpView {
 public:
  explicit MckpView(const DkpInstance& inst) : inst_(&inst) {}

  uint32_t group_count() const { return inst_->group_count(); }
  uint32_t profit(uint32_t group, uint32_t slot) const {
    return slot == 0 ? 0u : inst_->profit(group, slot - 1);
  }
  uint32_t weight(uint32_t group, uint32_t slot) const {
    return slot == 0 ? 0u : inst_->weight(group, slot - 1);
  }
  const DkpInstance& instance() const { return *inst_; }

 private:
  const DkpInstance* inst_;
};

inline MckpView to_mckp(const DkpInstance& inst) { return MckpView(inst); }

/// A (not necessarily feasible) assignment: one entry per group,
/// -1 = no item, 0/1/2 = item index within the group.
struct Solution {
  std::vector<int8_t> selection;
  int64_t value = 0;
  int64_t weight = 0;
  bool feasible = true;
};

/// Computes value/weight of a selection in 64-bit arithmetic and flags
/// feasibility against the capacity. Throws std::invalid_argument on a
/// selection of the wrong length or with entries outside {-1,0,1,2}.
Solution evaluate(const DkpInstance& inst, const std::vector<int8_t>& selection);

/// Expansion to the 3m-binary encoding and back, for reporting.
std::vector<uint8_t> to_binary(const DkpInstance& inst, const std::vector<int8_t>& selection);
std::vector<int8_t> from_binary(const DkpInstance& inst, const std::vector<uint8_t>& bits);

}  // namespace dkp
