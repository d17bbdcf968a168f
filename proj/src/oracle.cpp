#include "dkp/oracle.hpp"

#include <stdexcept>

namespace dkp {

namespace {

struct Search {
  const DkpInstance& inst;
  std::vector<int8_t> current;
  int64_t best_value = -1;
  std::vector<int8_t> best;

  void run(uint32_t group, uint64_t remaining, int64_t value) {
    if (group == inst.group_count()) {
      if (value > best_value) {
        best_value = value;
        best = current;
      }
      return;
    }
    current[group] = -1;
    run(group + 1, remaining, value);
    for (uint32_t k = 0; k < 3; ++k) {
      const uint32_t w = inst.weight(group, k);
      if (w <= remaining) {
        current[group] = static_cast<int8_t>(k);
        run(group + 1, remaining - w, value + inst.profit(group, k));
      }
    }
    current[group] = -1;
  }
};

}  // namespace

BruteForceResult brute_force(const DkpInstance& inst, uint32_t group_limit) {
  if (inst.group_count() > group_limit) {
    throw std::invalid_argument("brute_force: " + std::to_string(inst.group_count()) +
                                " groups exceed the limit of " + std::to_string(group_limit));
  }
  Search search{inst, std::vector<int8_t>(inst.group_count(), -1)};
  search.run(0, inst.capacity, 0);

  BruteForceResult result;
  result.value = search.best_value;
  result.best = evaluate(inst, search.best);
  return result;
}

}  // namespace dkp
