#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "dkp/instance.hpp"
#include "dkp/kernels.hpp"
#include "dkp/reducer.hpp"

namespace dkp {

struct DpOptions {
  uint64_t memory_limit = uint64_t{2} << 30;  // bytes
  kernels::Variant kernel = kernels::Variant::Auto;
};

struct ResourceError : std::runtime_error {
  ResourceError(const std::string& msg, uint64_t required)
      : std::runtime_error(msg), required_bytes(required) {}
  uint64_t required_bytes;
};

/// Exact optimum by capacity-indexed dynamic programming over two rolling
/// rows (O(b) memory). A plain implementation on purpose: no state pruning,
/// no dominance detection inside the recursion.
int64_t dp_value(const DkpInstance& inst, const DpOptions& opts = {});

/// Residual-problem optimum plus the reduced instance's value offset.
int64_t dp_value(const ReducedInstance& red, const DpOptions& opts = {});

/// Optimum plus a witness, reconstructed by backtracking through packed
/// 2-bit choice codes (m*(b+1)/4 bytes, charged against the memory limit).
Solution dp_solve(const DkpInstance& inst, const DpOptions& opts = {});

/// Witness in original index space: pinned groups select their third item,
/// residual groups map back through the index map.
Solution dp_solve(const ReducedInstance& red, const DpOptions& opts = {});

}  // namespace dkp
