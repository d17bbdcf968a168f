#pragma once

// Independent oracle for the group relaxation, used to check the greedy LP
// path. Works from the dual side: the relaxation optimum equals
//
//     min_{lambda >= 0}  lambda * b + sum_i max_k (c_ik - lambda * a_ik)
//
// with the per-group max running over the dummy slot and every non-excluded
// slot. The minimand is convex piecewise-linear with kinks only at
// within-group ratios (c_k - c_j)/(a_k - a_j), so evaluating it exactly at
// lambda = 0 and at every such ratio and keeping the minimum is exact.
// All arithmetic is integer (128-bit scaled values); intended for the small
// instances the test suites use.

#include <cassert>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "dkp/instance.hpp"
#include "dkp/lp.hpp"
#include "dkp/rational.hpp"

namespace dkptest {

struct ExactRational {
  __int128 num = 0;
  __int128 den = 1;

  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return a.num * b.den == b.num * a.den;
  }
};

inline bool rational_equals(const ExactRational& r, const dkp::UpperBound& u) {
  const __int128 lhs =
      (static_cast<__int128>(u.whole()) * u.den() + u.num()) * r.den;
  const __int128 rhs = r.num * static_cast<__int128>(u.den());
  return lhs == rhs;
}

class LpOracle {
 public:
  explicit LpOracle(dkp::MckpView view, std::vector<dkp::ItemRef> excluded = {})
      : view_(view), excluded_(std::move(excluded)) {}

  ExactRational relaxation_value() const {
    ExactRational best = dual_at(0, 1);
    const uint32_t m = view_.group_count();
    for (uint32_t g = 0; g < m; ++g) {
      for (uint8_t j = 0; j <= 3; ++j) {
        if (j > 0 && !usable(g, j)) continue;
        for (uint8_t k = static_cast<uint8_t>(j + 1); k <= 3; ++k) {
          if (!usable(g, k)) continue;
          const int64_t dc =
              static_cast<int64_t>(view_.profit(g, k)) - view_.profit(g, j);
          const int64_t da =
              static_cast<int64_t>(view_.weight(g, k)) - view_.weight(g, j);
          if (da <= 0 || dc < 0) continue;  // not a non-negative slope candidate
          const ExactRational cand = dual_at(dc, da);
          if (cand.num * best.den < best.num * cand.den) best = cand;
        }
      }
    }
    return best;
  }

 private:
  bool usable(uint32_t group, uint8_t slot) const {
    for (const dkp::ItemRef& ref : excluded_) {
      if (ref.group == group && ref.slot == slot) return false;
    }
    return true;
  }

  // dual(p/q) scaled by q, i.e. p*b + sum_i max_k (q*c - p*a).
  ExactRational dual_at(int64_t p, int64_t q) const {
    assert(q > 0 && p >= 0);
    __int128 total = static_cast<__int128>(p) * static_cast<__int128>(view_.instance().capacity);
    for (uint32_t g = 0; g < view_.group_count(); ++g) {
      __int128 best = 0;  // dummy slot
      for (uint8_t slot = 1; slot <= 3; ++slot) {
        if (!usable(g, slot)) continue;
        const __int128 cand = static_cast<__int128>(q) * view_.profit(g, slot) -
                              static_cast<__int128>(p) * view_.weight(g, slot);
        if (cand > best) best = cand;
      }
      total += best;
    }
    return {total, q};
  }

  dkp::MckpView view_;
  std::vector<dkp::ItemRef> excluded_;
};

}  // namespace dkptest
