#pragma once

#include <cstdint>

#include "dkp/instance.hpp"

namespace dkp {

struct BruteForceResult {
  int64_t value = 0;
  Solution best;
};

/// Exhaustive reference solver: depth-first over the 4^m selections with
/// residual-capacity pruning and nothing else, independent of the DP
/// machinery it is used to check. Refuses instances with more than
/// group_limit groups.
BruteForceResult brute_force(const DkpInstance& inst, uint32_t group_limit = 12);

}  // namespace dkp
