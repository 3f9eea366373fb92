#pragma once

#include <optional>
#include <span>
#include <vector>

#include "manna/rational.hpp"

namespace manna {

// A fair division instance: n agents, m items, and an exact n-by-m valuation
// matrix. Agents and items are dense 0-based indices; optional display names
// live in the CLI layer. Immutable after construction.
class Instance {
 public:
  Instance() = default;
  Instance(int agents, int items)
      : n_(agents), m_(items), values_(std::size_t(agents) * std::size_t(items)) {}

  static Instance from_rows(const std::vector<std::vector<Rational>>& rows);

  int agents() const { return n_; }
  int items() const { return m_; }

  const Rational& value(int agent, int item) const {
    return values_[std::size_t(agent) * m_ + item];
  }
  Rational& value(int agent, int item) { return values_[std::size_t(agent) * m_ + item]; }

  // v_i(M)
  Rational total(int agent) const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<Rational> values_;
};

// Disjoint assignment of a subset of the items to agents. Complete when every
// item is assigned. Bundles are kept sorted ascending.
class Allocation {
 public:
  Allocation() = default;
  Allocation(int agents, int items)
      : bundles_(agents), holder_(items, -1) {}

  static Allocation from_bundles(int items, const std::vector<std::vector<int>>& bundles);

  int agents() const { return int(bundles_.size()); }
  int items() const { return int(holder_.size()); }

  const std::vector<std::vector<int>>& bundles() const { return bundles_; }
  const std::vector<int>& bundle(int agent) const { return bundles_[agent]; }

  // -1 when unallocated.
  int holder(int item) const { return holder_[item]; }
  bool is_allocated(int item) const { return holder_[item] >= 0; }
  bool complete() const;
  int allocated_count() const;
  std::vector<int> allocated_items() const;  // ascending

  void assign(int item, int agent);
  void unassign(int item);

  // Replaces every bundle at once; used by cycle rotation.
  void set_bundles(std::vector<std::vector<int>> bundles);

  friend bool operator==(const Allocation& a, const Allocation& b) {
    return a.bundles_ == b.bundles_ && a.holder_ == b.holder_;
  }

 private:
  std::vector<std::vector<int>> bundles_;
  std::vector<int> holder_;
};

// The M+/M0/M- split of the item set, each list ascending.
struct ItemPartition {
  std::vector<int> m_plus;   // valued > 0 by at least one agent
  std::vector<int> m_zero;   // <= 0 for everyone, = 0 for someone
  std::vector<int> m_minus;  // < 0 for everyone
};

ItemPartition partition_items(const Instance& inst);

struct InstanceClass {
  bool goods_only = false;
  bool bads_only = false;
  bool separable = false;
  bool restricted_mixed_goods = false;
  bool binary_mixed_goods = false;
  bool ido_bads = false;
  bool identical_bads = false;
  bool ido_all = false;
  bool identical_all = false;
  // Engaged iff restricted_mixed_goods; sized m, meaningful on M+ entries.
  std::optional<std::vector<Rational>> restricted_values;
};

InstanceClass classify(const Instance& inst);

// v_i(M) / n
Rational proportional_share(const Instance& inst, int agent);

// Exact additive sum over the bundle.
Rational bundle_value(const Instance& inst, int agent, std::span<const int> bundle);

// Utility of every agent under the allocation.
std::vector<Rational> utilities(const Instance& inst, const Allocation& alloc);

// Agents with v_i(M) <= 0 are frozen to the empty bundle; the solver runs on
// the rest. Raises ALL_AGENTS_INACTIVE when nobody is active but items remain.
struct ActiveAgents {
  std::vector<int> active;
  std::vector<int> inactive;
};

ActiveAgents preprocess_nonpositive_agents(const Instance& inst);

// A common worst-first order over `items` shared by every agent, if one
// exists (ties broken by ascending item index).
std::optional<std::vector<int>> common_ascending_order(const Instance& inst,
                                                       const std::vector<int>& items);

Instance row_subinstance(const Instance& inst, const std::vector<int>& agents);
Instance column_subinstance(const Instance& inst, const std::vector<int>& items);

}  // namespace manna
