#pragma once

#include <vector>

#include "dkp/generator.hpp"
#include "dkp/instance.hpp"

namespace dkptest {

// Two groups, capacity 12. Optimum 30 by taking the first group's third item.
inline dkp::DkpInstance t2() {
  dkp::DkpInstance inst;
  inst.capacity = 12;
  inst.profits = {10, 20, 30, 7, 9, 16};
  inst.weights = {5, 8, 10, 4, 6, 9};
  return inst;
}

inline dkp::DkpInstance make_generated(dkp::Family family, uint32_t groups, uint64_t seed) {
  dkp::GenSpec spec;
  spec.family = family;
  spec.groups = groups;
  spec.seed = seed;
  return dkp::generate(spec);
}

// Mixed-family corpus of small instances with m drawn uniformly from
// [m_min, m_max].
inline std::vector<dkp::DkpInstance> small_corpus(size_t count, uint32_t m_min = 2,
                                                  uint32_t m_max = 10,
                                                  uint64_t seed0 = 0x5eedbeef) {
  static constexpr dkp::Family kFamilies[] = {
      dkp::Family::Uncorrelated, dkp::Family::Weak, dkp::Family::Strong,
      dkp::Family::InverseStrong};
  dkp::SplitMix64 rng(seed0);
  std::vector<dkp::DkpInstance> corpus;
  corpus.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    const uint32_t m = static_cast<uint32_t>(dkp::uniform_in(rng, m_min, m_max));
    corpus.push_back(make_generated(kFamilies[i % 4], m, rng.next()));
  }
  return corpus;
}

}  // namespace dkptest
