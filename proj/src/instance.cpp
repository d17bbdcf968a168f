#include "dkp/instance.hpp"

#include <stdexcept>

namespace dkp {

namespace {

std::string group_item_tag(uint32_t item) {
  switch (item) {
    case 0: return "a[3i]";
    case 1: return "a[3i+1]";
    default: return "a[3i+2]";
  }
}

}  // namespace

ValidationReport validate(const DkpInstance& inst, bool strict) {
  ValidationReport report;
  const uint32_t m = inst.group_count();

  if (inst.profits.size() != inst.weights.size() || inst.profits.size() % 3 != 0) {
    report.violations.push_back({-1, "profit/weight arrays must both have size 3m"});
    return report;
  }

  for (uint32_t j = 0; j < inst.item_count(); ++j) {
    if (inst.profits[j] == 0) {
      report.violations.push_back({j / 3, "c[j] must be positive"});
    }
    if (inst.weights[j] == 0) {
      report.violations.push_back({j / 3, "a[j] must be positive"});
    }
  }

  uint64_t heavy_sum = 0;
  for (uint32_t i = 0; i < m; ++i) {
    const uint64_t c0 = inst.profit(i, 0), c1 = inst.profit(i, 1), c2 = inst.profit(i, 2);
    const uint64_t a0 = inst.weight(i, 0), a1 = inst.weight(i, 1), a2 = inst.weight(i, 2);

    if (c2 != c0 + c1) {
      report.violations.push_back({i, "c[3i+2] != c[3i] + c[3i+1]"});
    }
    if (!(a0 < a1)) report.violations.push_back({i, "a[3i] < a[3i+1] fails"});
    if (!(a1 < a2)) report.violations.push_back({i, "a[3i+1] < a[3i+2] fails"});
    if (!(a2 < a0 + a1)) report.violations.push_back({i, "a[3i+2] < a[3i] + a[3i+1] fails"});
    // Implied by positivity and the sum identity, still checked.
    if (!(c0 < c1)) report.violations.push_back({i, "c[3i] < c[3i+1] fails"});
    if (!(c1 < c2)) report.violations.push_back({i, "c[3i+1] < c[3i+2] fails"});

    heavy_sum += a2;
    if (strict && a2 > inst.capacity) {
      report.violations.push_back({i, group_item_tag(2) + " <= b fails"});
    }
  }

  if (strict && !(heavy_sum > inst.capacity)) {
    report.violations.push_back({-1, "sum of a[3i+2] > b fails"});
  }
  return report;
}

Solution evaluate(const DkpInstance& inst, const std::vector<int8_t>& selection) {
  const uint32_t m = inst.group_count();
  if (selection.size() != m) {
    throw std::invalid_argument("selection length " + std::to_string(selection.size()) +
                                " does not match group count " + std::to_string(m));
  }
  Solution sol;
  sol.selection = selection;
  for (uint32_t i = 0; i < m; ++i) {
    const int8_t s = selection[i];
    if (s < -1 || s > 2) {
      throw std::invalid_argument("selection entry out of range at group " + std::to_string(i));
    }
    if (s >= 0) {
      sol.value += inst.profit(i, static_cast<uint32_t>(s));
      sol.weight += inst.weight(i, static_cast<uint32_t>(s));
    }
  }
  sol.feasible = static_cast<uint64_t>(sol.weight) <= inst.capacity;
  return sol;
}

std::vector<uint8_t> to_binary(const DkpInstance& inst, const std::vector<int8_t>& selection) {
  std::vector<uint8_t> bits(inst.item_count(), 0);
  for (uint32_t i = 0; i < selection.size() && i < inst.group_count(); ++i) {
    if (selection[i] >= 0) bits[3 * i + static_cast<uint32_t>(selection[i])] = 1;
  }
  return bits;
}

std::vector<int8_t> from_binary(const DkpInstance& inst, const std::vector<uint8_t>& bits) {
  if (bits.size() != inst.item_count()) {
    throw std::invalid_argument("binary vector must have size 3m");
  }
  std::vector<int8_t> selection(inst.group_count(), -1);
  for (uint32_t i = 0; i < inst.group_count(); ++i) {
    for (uint32_t k = 0; k < 3; ++k) {
      if (bits[3 * i + k]) {
        if (selection[i] >= 0) {
          throw std::invalid_argument("more than one item set in group " + std::to_string(i));
        }
        selection[i] = static_cast<int8_t>(k);
      }
    }
  }
  return selection;
}

}  // namespace dkp
