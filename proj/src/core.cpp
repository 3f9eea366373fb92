#include "manna/core.hpp"

#include <algorithm>

namespace manna {

Instance Instance::from_rows(const std::vector<std::vector<Rational>>& rows) {
  int n = int(rows.size());
  int m = rows.empty() ? 0 : int(rows.front().size());
  for (const auto& row : rows) {
    if (int(row.size()) != m) fail(Errc::Parse, "valuation matrix is not rectangular");
  }
  Instance inst(n, m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) inst.value(i, j) = rows[i][j];
  }
  return inst;
}

Rational Instance::total(int agent) const {
  Rational sum;
  for (int j = 0; j < m_; ++j) sum += value(agent, j);
  return sum;
}

Allocation Allocation::from_bundles(int items, const std::vector<std::vector<int>>& bundles) {
  Allocation alloc(int(bundles.size()), items);
  for (int i = 0; i < int(bundles.size()); ++i) {
    for (int item : bundles[i]) alloc.assign(item, i);
  }
  return alloc;
}

bool Allocation::complete() const {
  return std::all_of(holder_.begin(), holder_.end(), [](int h) { return h >= 0; });
}

int Allocation::allocated_count() const {
  return int(std::count_if(holder_.begin(), holder_.end(), [](int h) { return h >= 0; }));
}

std::vector<int> Allocation::allocated_items() const {
  std::vector<int> out;
  for (int j = 0; j < items(); ++j) {
    if (holder_[j] >= 0) out.push_back(j);
  }
  return out;
}

void Allocation::assign(int item, int agent) {
  if (item < 0 || item >= items()) fail(Errc::Internal, "item index out of range");
  if (agent < 0 || agent >= agents()) fail(Errc::Internal, "agent index out of range");
  if (holder_[item] >= 0) fail(Errc::Internal, "item assigned twice");
  holder_[item] = agent;
  auto& b = bundles_[agent];
  b.insert(std::lower_bound(b.begin(), b.end(), item), item);
}

void Allocation::unassign(int item) {
  int agent = holder_[item];
  if (agent < 0) fail(Errc::Internal, "item not allocated");
  auto& b = bundles_[agent];
  b.erase(std::lower_bound(b.begin(), b.end(), item));
  holder_[item] = -1;
}

void Allocation::set_bundles(std::vector<std::vector<int>> bundles) {
  if (bundles.size() != bundles_.size()) fail(Errc::Internal, "bundle count mismatch");
  bundles_ = std::move(bundles);
  std::fill(holder_.begin(), holder_.end(), -1);
  for (int i = 0; i < agents(); ++i) {
    std::sort(bundles_[i].begin(), bundles_[i].end());
    for (int item : bundles_[i]) {
      if (holder_[item] >= 0) fail(Errc::Internal, "bundles overlap");
      holder_[item] = i;
    }
  }
}

ItemPartition partition_items(const Instance& inst) {
  ItemPartition part;
  for (int j = 0; j < inst.items(); ++j) {
    bool any_positive = false;
    bool any_zero = false;
    for (int i = 0; i < inst.agents(); ++i) {
      int s = inst.value(i, j).sign();
      if (s > 0) any_positive = true;
      if (s == 0) any_zero = true;
    }
    if (any_positive) {
      part.m_plus.push_back(j);
    } else if (any_zero) {
      part.m_zero.push_back(j);
    } else {
      part.m_minus.push_back(j);
    }
  }
  return part;
}

std::optional<std::vector<int>> common_ascending_order(const Instance& inst,
                                                       const std::vector<int>& items) {
  std::vector<int> order = items;
  // Lexicographic sort on the per-agent value column; if any common
  // non-decreasing order exists, this one is it.
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    for (int i = 0; i < inst.agents(); ++i) {
      if (inst.value(i, a) != inst.value(i, b)) return inst.value(i, a) < inst.value(i, b);
    }
    return a < b;
  });
  for (std::size_t t = 1; t < order.size(); ++t) {
    for (int i = 0; i < inst.agents(); ++i) {
      if (inst.value(i, order[t - 1]) > inst.value(i, order[t])) return std::nullopt;
    }
  }
  return order;
}

InstanceClass classify(const Instance& inst) {
  InstanceClass cls;
  ItemPartition part = partition_items(inst);

  cls.goods_only = true;
  cls.bads_only = true;
  for (int i = 0; i < inst.agents(); ++i) {
    for (int j = 0; j < inst.items(); ++j) {
      int s = inst.value(i, j).sign();
      if (s < 0) cls.goods_only = false;
      if (s >= 0) cls.bads_only = false;
    }
  }

  // Separable: every item is non-negative for everyone or negative for
  // everyone, i.e. M = M>=0 u M-.
  cls.separable = true;
  for (int j : part.m_plus) {
    for (int i = 0; i < inst.agents(); ++i) {
      if (inst.value(i, j).is_negative()) cls.separable = false;
    }
  }
  for (int j : part.m_zero) {
    for (int i = 0; i < inst.agents(); ++i) {
      if (inst.value(i, j).is_negative()) cls.separable = false;
    }
  }

  cls.restricted_mixed_goods = true;
  std::vector<Rational> restricted(inst.items());
  for (int j : part.m_plus) {
    std::optional<Rational> common;
    for (int i = 0; i < inst.agents(); ++i) {
      const Rational& v = inst.value(i, j);
      if (!v.is_positive()) continue;
      if (!common) {
        common = v;
      } else if (*common != v) {
        cls.restricted_mixed_goods = false;
      }
    }
    restricted[j] = *common;  // m_plus items have at least one positive valuer
  }
  if (cls.restricted_mixed_goods) {
    cls.binary_mixed_goods = true;
    for (std::size_t t = 1; t < part.m_plus.size(); ++t) {
      if (restricted[part.m_plus[t]] != restricted[part.m_plus[0]]) {
        cls.binary_mixed_goods = false;
      }
    }
    cls.restricted_values = std::move(restricted);
  }

  cls.identical_bads = true;
  for (int j : part.m_minus) {
    for (int i = 1; i < inst.agents(); ++i) {
      if (inst.value(i, j) != inst.value(0, j)) cls.identical_bads = false;
    }
  }
  cls.identical_all = true;
  for (int j = 0; j < inst.items(); ++j) {
    for (int i = 1; i < inst.agents(); ++i) {
      if (inst.value(i, j) != inst.value(0, j)) cls.identical_all = false;
    }
  }

  cls.ido_bads = common_ascending_order(inst, part.m_minus).has_value();
  std::vector<int> all_items(inst.items());
  for (int j = 0; j < inst.items(); ++j) all_items[j] = j;
  cls.ido_all = common_ascending_order(inst, all_items).has_value();

  return cls;
}

Rational proportional_share(const Instance& inst, int agent) {
  return inst.total(agent) / Rational(inst.agents());
}

Rational bundle_value(const Instance& inst, int agent, std::span<const int> bundle) {
  Rational sum;
  for (int item : bundle) sum += inst.value(agent, item);
  return sum;
}

std::vector<Rational> utilities(const Instance& inst, const Allocation& alloc) {
  std::vector<Rational> out(alloc.agents());
  for (int i = 0; i < alloc.agents(); ++i) out[i] = bundle_value(inst, i, alloc.bundle(i));
  return out;
}

ActiveAgents preprocess_nonpositive_agents(const Instance& inst) {
  ActiveAgents result;
  for (int i = 0; i < inst.agents(); ++i) {
    if (inst.total(i).is_positive()) {
      result.active.push_back(i);
    } else {
      result.inactive.push_back(i);
    }
  }
  if (result.active.empty() && inst.items() > 0) {
    fail(Errc::AllAgentsInactive,
         "every agent values the whole manna non-positively; items remain unallocatable "
         "under the solver's guarantees");
  }
  return result;
}

Instance row_subinstance(const Instance& inst, const std::vector<int>& agents) {
  Instance sub(int(agents.size()), inst.items());
  for (int i = 0; i < int(agents.size()); ++i) {
    for (int j = 0; j < inst.items(); ++j) sub.value(i, j) = inst.value(agents[i], j);
  }
  return sub;
}

Instance column_subinstance(const Instance& inst, const std::vector<int>& items) {
  Instance sub(inst.agents(), int(items.size()));
  for (int i = 0; i < inst.agents(); ++i) {
    for (int j = 0; j < int(items.size()); ++j) sub.value(i, j) = inst.value(i, items[j]);
  }
  return sub;
}

}  // namespace manna
