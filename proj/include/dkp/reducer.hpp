#pragma once

#include <cstdint>
#include <vector>

#include "dkp/instance.hpp"
#include "dkp/lp.hpp"

namespace dkp {

/// One per-group audit: the relaxation re-solved with the group's third item
/// excluded. `fixed` means the rounded bound could not beat the incumbent at
/// that moment, so the third item is selected in some optimum (unless the
/// incumbent itself is optimal).
struct GroupAudit {
  uint32_t group = 0;
  UpperBound ubar_i;
  int64_t lb_i = 0;
  int64_t lb_best_after = 0;
  bool fixed = false;
};

struct FixationReport {
  std::vector<ItemRef> f0;      // dominated items (heuristic fixations to 0)
  std::vector<uint32_t> f1;     // groups pinned to their third item (exact)
  int64_t lb_best = 0;
  Solution x_best;
  std::vector<GroupAudit> audits;
};

/// Walks groups in ascending index order; audits exactly those whose third
/// item sits at level 1 in the relaxation optimum. Sequential by contract:
/// lb_best threads through the loop, so audit order changes f1 membership.
FixationReport ub_fix(const DkpInstance& inst, const LpResult& lp);

/// Residual problem after removing the pinned groups and masking dominated
/// items. Removing pinned groups preserves the optimum (together with
/// lb_best); masking dominated items is heuristic and may lose it.
struct ReducedInstance {
  uint32_t orig_groups = 0;
  uint64_t orig_capacity = 0;
  std::vector<uint32_t> profits;     // 3 per residual group
  std::vector<uint32_t> weights;     // 3 per residual group
  std::vector<uint8_t> masks;        // allowed-item bits (1<<item) per residual group
  std::vector<uint32_t> orig_group;  // residual index -> original group
  std::vector<uint32_t> fixed_groups;
  uint64_t capacity = 0;             // residual capacity
  int64_t value_offset = 0;          // sum of pinned third-item profits
  int64_t weight_offset = 0;         // sum of pinned third-item weights

  uint32_t group_count() const { return static_cast<uint32_t>(orig_group.size()); }
};

ReducedInstance apply_fixations(const DkpInstance& inst, const FixationReport& report,
                                bool use_f0, bool use_f1);

}  // namespace dkp
