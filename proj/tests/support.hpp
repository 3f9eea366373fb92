#pragma once

#include <vector>

#include "manna/core.hpp"
#include "manna/rng.hpp"

namespace testsupport {

inline manna::Instance make_instance(const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<manna::Rational>> converted;
  for (const auto& row : rows) {
    converted.emplace_back(row.begin(), row.end());
  }
  return manna::Instance::from_rows(converted);
}

// Three identical agents over goods 3,3,3,3,1; no PropX allocation exists.
inline manna::Instance a1_instance() {
  return make_instance({{3, 3, 3, 3, 1}, {3, 3, 3, 3, 1}, {3, 3, 3, 3, 1}});
}

// Two agents over restricted goods, a = (1,0,2), b = (0,1,2); PropM0 and PO
// cannot be had together here.
inline manna::Instance a2_instance() {
  return make_instance({{1, 0, 2}, {0, 1, 2}});
}

inline manna::Allocation make_allocation(const manna::Instance& inst,
                                         const std::vector<std::vector<int>>& bundles) {
  return manna::Allocation::from_bundles(inst.items(), bundles);
}

inline manna::Instance random_instance(manna::SplitMix64& rng, int max_agents = 4,
                                       int max_items = 7, long long lo = -9, long long hi = 9) {
  int n = int(1 + rng.below(std::uint64_t(max_agents)));
  int m = int(rng.below(std::uint64_t(max_items + 1)));
  manna::Instance inst(n, m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) inst.value(i, j) = manna::Rational(rng.range(lo, hi));
  }
  return inst;
}

inline manna::Allocation random_allocation(manna::SplitMix64& rng, const manna::Instance& inst) {
  manna::Allocation alloc(inst.agents(), inst.items());
  for (int j = 0; j < inst.items(); ++j) {
    alloc.assign(j, int(rng.below(std::uint64_t(inst.agents()))));
  }
  return alloc;
}

}  // namespace testsupport
