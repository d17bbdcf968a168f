#include "dkp/dp.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace dkp {

namespace {

struct Stage {
  std::array<uint32_t, 3> weight{};
  std::array<uint32_t, 3> profit{};
  uint8_t mask = 0;
};

std::vector<Stage> stages_of(const DkpInstance& inst) {
  std::vector<Stage> stages(inst.group_count());
  for (uint32_t g = 0; g < inst.group_count(); ++g) {
    for (uint32_t k = 0; k < 3; ++k) {
      stages[g].weight[k] = inst.weight(g, k);
      stages[g].profit[k] = inst.profit(g, k);
    }
    stages[g].mask = 0b111;
  }
  return stages;
}

std::vector<Stage> stages_of(const ReducedInstance& red) {
  std::vector<Stage> stages(red.group_count());
  for (uint32_t g = 0; g < red.group_count(); ++g) {
    for (uint32_t k = 0; k < 3; ++k) {
      stages[g].weight[k] = red.weights[3 * g + k];
      stages[g].profit[k] = red.profits[3 * g + k];
    }
    stages[g].mask = red.masks[g];
  }
  return stages;
}

uint64_t checked_state_bytes(uint64_t capacity, uint64_t stage_count, bool with_codes,
                             uint64_t limit) {
  const unsigned __int128 states = static_cast<unsigned __int128>(capacity) + 1;
  const unsigned __int128 row_bytes = 2 * states * sizeof(int64_t);
  const unsigned __int128 code_bytes = with_codes ? (stage_count * states + 3) / 4 : 0;
  const unsigned __int128 total = row_bytes + code_bytes;
  if (total > limit) {
    const uint64_t total64 = total > UINT64_MAX ? UINT64_MAX : static_cast<uint64_t>(total);
    const uint64_t codes64 =
        code_bytes > UINT64_MAX ? UINT64_MAX : static_cast<uint64_t>(code_bytes);
    std::string msg = "dynamic program needs " + std::to_string(total64) + " bytes";
    if (with_codes) {
      msg += " (" + std::to_string(codes64) + " bytes for predecessor codes)";
    }
    msg += "; memory limit is " + std::to_string(limit) + " bytes";
    throw ResourceError(msg, total64);
  }
  return static_cast<uint64_t>(total);
}

void run_stage(const Stage& st, const std::vector<int64_t>& prev, std::vector<int64_t>& cur,
               uint64_t capacity, kernels::RelaxFn relax) {
  std::copy(prev.begin(), prev.end(), cur.begin());  // the take-nothing branch
  for (uint32_t k = 0; k < 3; ++k) {
    if (!(st.mask & (1u << k))) continue;
    const uint64_t w = st.weight[k];
    if (w > capacity) continue;
    relax(cur.data() + w, prev.data(), static_cast<size_t>(capacity + 1 - w),
          static_cast<int64_t>(st.profit[k]));
  }
}

int64_t value_over_stages(const std::vector<Stage>& stages, uint64_t capacity,
                          const DpOptions& opts) {
  if (stages.empty()) return 0;
  checked_state_bytes(capacity, stages.size(), false, opts.memory_limit);
  const kernels::RelaxFn relax = kernels::select(opts.kernel);

  std::vector<int64_t> prev(static_cast<size_t>(capacity) + 1, 0);
  std::vector<int64_t> cur(prev.size());
  for (const Stage& st : stages) {
    run_stage(st, prev, cur, capacity, relax);
    std::swap(prev, cur);
  }
  return prev[static_cast<size_t>(capacity)];
}

class ChoiceCodes {
 public:
  ChoiceCodes(size_t stage_count, size_t states)
      : states_(states), bytes_((stage_count * states + 3) / 4, 0) {}

  void set(size_t stage, size_t beta, uint8_t code) {
    const size_t idx = stage * states_ + beta;
    bytes_[idx >> 2] |= static_cast<uint8_t>(code << ((idx & 3) * 2));
  }
  uint8_t get(size_t stage, size_t beta) const {
    const size_t idx = stage * states_ + beta;
    return (bytes_[idx >> 2] >> ((idx & 3) * 2)) & 3;
  }

 private:
  size_t states_;
  std::vector<uint8_t> bytes_;
};

struct SolveOutcome {
  int64_t value = 0;
  int64_t weight = 0;
  std::vector<int8_t> selection;  // per stage, -1 or item index
};

// Choice codes are derived from the finished rows with a fixed preference
// (take nothing, then item 0, 1, 2), so witnesses do not depend on which
// kernel produced the values.
SolveOutcome solve_over_stages(const std::vector<Stage>& stages, uint64_t capacity,
                               const DpOptions& opts) {
  SolveOutcome out;
  out.selection.assign(stages.size(), -1);
  if (stages.empty()) return out;

  checked_state_bytes(capacity, stages.size(), true, opts.memory_limit);
  const kernels::RelaxFn relax = kernels::select(opts.kernel);
  const size_t states = static_cast<size_t>(capacity) + 1;

  ChoiceCodes codes(stages.size(), states);
  std::vector<int64_t> prev(states, 0);
  std::vector<int64_t> cur(states);
  for (size_t i = 0; i < stages.size(); ++i) {
    const Stage& st = stages[i];
    run_stage(st, prev, cur, capacity, relax);
    for (size_t beta = 0; beta < states; ++beta) {
      const int64_t v = cur[beta];
      if (v == prev[beta]) continue;  // code 0 is the default
      for (uint32_t k = 0; k < 3; ++k) {
        if (!(st.mask & (1u << k))) continue;
        const uint64_t w = st.weight[k];
        if (beta >= w && v == prev[beta - w] + st.profit[k]) {
          codes.set(i, beta, static_cast<uint8_t>(k + 1));
          break;
        }
      }
    }
    std::swap(prev, cur);
  }
  out.value = prev[states - 1];

  size_t beta = states - 1;
  for (size_t i = stages.size(); i-- > 0;) {
    const uint8_t code = codes.get(i, beta);
    if (code != 0) {
      const uint32_t k = code - 1;
      out.selection[i] = static_cast<int8_t>(k);
      beta -= stages[i].weight[k];
    }
  }
  out.weight = static_cast<int64_t>(capacity - beta);
  return out;
}

}  // namespace

int64_t dp_value(const DkpInstance& inst, const DpOptions& opts) {
  return value_over_stages(stages_of(inst), inst.capacity, opts);
}

int64_t dp_value(const ReducedInstance& red, const DpOptions& opts) {
  return red.value_offset + value_over_stages(stages_of(red), red.capacity, opts);
}

Solution dp_solve(const DkpInstance& inst, const DpOptions& opts) {
  const SolveOutcome out = solve_over_stages(stages_of(inst), inst.capacity, opts);
  return evaluate(inst, out.selection);
}

Solution dp_solve(const ReducedInstance& red, const DpOptions& opts) {
  const SolveOutcome out = solve_over_stages(stages_of(red), red.capacity, opts);

  Solution sol;
  sol.selection.assign(red.orig_groups, -1);
  for (uint32_t g : red.fixed_groups) sol.selection[g] = 2;
  for (uint32_t r = 0; r < red.group_count(); ++r) {
    sol.selection[red.orig_group[r]] = out.selection[r];
  }
  sol.value = red.value_offset + out.value;
  sol.weight = red.weight_offset + out.weight;
  sol.feasible = static_cast<uint64_t>(sol.weight) <= red.orig_capacity;
  return sol;
}

}  // namespace dkp
