#include "manna/algorithms.hpp"

#include <algorithm>
#include <numeric>

#include "manna/fairness.hpp"

namespace manna {

namespace {

// Allocation plus the n x n cross-value matrix cross[i][h] = v_i(x_h), kept
// incrementally so envy graphs rebuild in O(n^2).
class AlgState {
 public:
  explicit AlgState(const Instance& inst)
      : inst_(&inst),
        alloc_(inst.agents(), inst.items()),
        cross_(inst.agents(), std::vector<Rational>(inst.agents())) {}

  const Allocation& allocation() const { return alloc_; }
  const Instance& instance() const { return *inst_; }

  void assign(int item, int agent) {
    alloc_.assign(item, agent);
    for (int i = 0; i < inst_->agents(); ++i) cross_[i][agent] += inst_->value(i, item);
  }

  EnvyGraph graph(EnvyMode mode) const { return build_envy_graph_from_cross(cross_, mode); }

  void rotate(const EnvyGraph& g, const std::vector<int>& cycle) {
    alloc_ = rotate_cycle(*inst_, alloc_, g, cycle);
    std::vector<std::vector<Rational>> old = cross_;
    for (int i = 0; i < inst_->agents(); ++i) {
      for (std::size_t t = 0; t < cycle.size(); ++t) {
        cross_[i][cycle[t]] = old[i][cycle[(t + 1) % cycle.size()]];
      }
    }
  }

  Rational current_social_welfare() const {
    Rational sum;
    for (int i = 0; i < inst_->agents(); ++i) sum += cross_[i][i];
    return sum;
  }

 private:
  const Instance* inst_;
  Allocation alloc_;
  std::vector<std::vector<Rational>> cross_;
};

class TraceBuilder {
 public:
  void assign(const std::string& rule, int item, int agent) {
    steps_.push_back({int(steps_.size()), rule, item, agent, {}});
  }
  void rotate(const std::vector<int>& cycle) {
    steps_.push_back({int(steps_.size()), "rotate-cycle", -1, -1, cycle});
  }
  std::vector<TraceStep> take() { return std::move(steps_); }

 private:
  std::vector<TraceStep> steps_;
};

[[noreturn]] void precondition(AlgorithmId id, const std::string& what) {
  fail(Errc::PreconditionViolated, std::string(algorithm_name(id)) + ": " + what);
}

// Core of the restricted-goods procedure: goods in descending common value
// (ties by index), each to the lowest-index source of the envy graph induced
// on its positive valuers. Returns assignments in processing order.
std::vector<std::pair<int, int>> restricted_goods_core(const Instance& inst,
                                                       const std::vector<Rational>& item_value) {
  std::vector<int> order(inst.items());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (item_value[a] != item_value[b]) return item_value[a] > item_value[b];
    return a < b;
  });

  AlgState state(inst);
  std::vector<std::pair<int, int>> assigns;
  for (int j : order) {
    std::vector<int> positive_valuers;
    for (int i = 0; i < inst.agents(); ++i) {
      if (inst.value(i, j) == item_value[j]) positive_valuers.push_back(i);
    }
    auto source = find_source(state.graph(EnvyMode::Plain), positive_valuers);
    if (!source) fail(Errc::Internal, "restricted goods step found no source");
    state.assign(j, *source);
    assigns.emplace_back(j, *source);
  }
  return assigns;
}

// Phase 1 (mixed goods) and phase 2 (dummies) shared by alg2/alg3/alg5/alg6.
// The binary variant routes phase 1 through the MNW procedure and phase 2
// through source selection.
void run_goods_phases(AlgState& state, const Instance& inst, const ItemPartition& part,
                      const InstanceClass& cls, bool binary_variant, TraceBuilder& trace) {
  if (!part.m_plus.empty()) {
    Instance projected = positive_projection(inst, part.m_plus);
    if (binary_variant) {
      Allocation mnw = binary_goods_mnw(projected);
      for (int t = 0; t < projected.items(); ++t) {
        state.assign(part.m_plus[t], mnw.holder(t));
        trace.assign("phase1-binary-mnw", part.m_plus[t], mnw.holder(t));
      }
    } else {
      std::vector<Rational> item_value(projected.items());
      for (int t = 0; t < projected.items(); ++t) {
        item_value[t] = (*cls.restricted_values)[part.m_plus[t]];
      }
      for (auto [t, agent] : restricted_goods_core(projected, item_value)) {
        state.assign(part.m_plus[t], agent);
        trace.assign("phase1-restricted-source", part.m_plus[t], agent);
      }
    }
  }

  for (int j : part.m_zero) {
    if (binary_variant) {
      std::vector<int> zero_valuers;
      for (int i = 0; i < inst.agents(); ++i) {
        if (inst.value(i, j).is_zero()) zero_valuers.push_back(i);
      }
      auto source = find_source(state.graph(EnvyMode::Plain), zero_valuers);
      if (!source) fail(Errc::Internal, "dummy phase found no source among zero valuers");
      state.assign(j, *source);
      trace.assign("phase2-zero-source", j, *source);
    } else {
      int agent = -1;
      for (int i = 0; i < inst.agents() && agent < 0; ++i) {
        if (inst.value(i, j).is_zero()) agent = i;
      }
      if (agent < 0) fail(Errc::Internal, "dummy item has no zero valuer");
      state.assign(j, agent);
      trace.assign("phase2-zero-valuer", j, agent);
    }
  }
}

// Phase 3 of alg2/alg3: identical bads, most painful first, to the
// lowest-index sink of the plain envy graph.
void run_identical_bads_phase(AlgState& state, const Instance& inst, const ItemPartition& part,
                              TraceBuilder& trace) {
  std::vector<int> order = part.m_minus;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (inst.value(0, a) != inst.value(0, b)) return inst.value(0, a) < inst.value(0, b);
    return a < b;
  });
  for (int j : order) {
    auto sink = find_sink(state.graph(EnvyMode::Plain));
    if (!sink) fail(Errc::Internal, "identical-bads phase found no sink (graph has a cycle)");
    state.assign(j, *sink);
    trace.assign("phase3-sink", j, *sink);
  }
}

// Phase 3 of alg4/alg5/alg6: bads in the given worst-first order; top-envy
// cycles are rotated away until a sink exists, then the bad goes to the
// lowest-index sink. Each rotation must strictly raise the social welfare.
void run_top_sink_bads_phase(AlgState& state, const std::vector<int>& bad_order,
                             TraceBuilder& trace) {
  for (int j : bad_order) {
    int rounds = 0;
    EnvyGraph graph = state.graph(EnvyMode::Top);
    while (!find_sink(graph)) {
      auto cycle = find_cycle(graph);
      if (!cycle) fail(Errc::Internal, "sinkless top-envy graph without a cycle");
      Rational before = state.current_social_welfare();
      state.rotate(graph, *cycle);
      if (state.current_social_welfare() <= before) {
        fail(Errc::Internal, "cycle rotation did not raise social welfare");
      }
      trace.rotate(*cycle);
      if (++rounds > state.instance().agents() + 1) {
        fail(Errc::Internal, "cycle elimination exceeded its bound");
      }
      graph = state.graph(EnvyMode::Top);
    }
    int sink = *find_sink(graph);
    state.assign(j, sink);
    trace.assign("phase3-top-sink", j, sink);
  }
}

std::vector<Guarantee> guarantees_of(AlgorithmId id, bool binary) {
  switch (id) {
    case AlgorithmId::Alg1RestrictedGoods:
    case AlgorithmId::Alg2RmgIdenticalBads:
      return {Guarantee::Efx, Guarantee::PropMx, Guarantee::Po, Guarantee::MaxSw};
    case AlgorithmId::Alg3BinaryMixed:
      return {Guarantee::Efx0, Guarantee::PropMx0, Guarantee::Po, Guarantee::MaxSw};
    case AlgorithmId::Alg4Separable:
      return {Guarantee::PropMx0};
    case AlgorithmId::Alg5RmgIdoBads:
      return binary ? std::vector<Guarantee>{Guarantee::Efx0, Guarantee::PropMx0}
                    : std::vector<Guarantee>{Guarantee::Efx, Guarantee::PropMx};
    case AlgorithmId::Alg6RmgGeneralBads:
      return binary ? std::vector<Guarantee>{Guarantee::PropMx0}
                    : std::vector<Guarantee>{Guarantee::PropMx};
    default:
      fail(Errc::Internal, "no guarantee set for AUTO");
  }
}

}  // namespace

const char* algorithm_name(AlgorithmId id) {
  switch (id) {
    case AlgorithmId::Alg1RestrictedGoods: return "alg1";
    case AlgorithmId::Alg2RmgIdenticalBads: return "alg2";
    case AlgorithmId::Alg3BinaryMixed: return "alg3";
    case AlgorithmId::Alg4Separable: return "alg4";
    case AlgorithmId::Alg5RmgIdoBads: return "alg5";
    case AlgorithmId::Alg6RmgGeneralBads: return "alg6";
    case AlgorithmId::Auto: return "auto";
  }
  return "?";
}

std::optional<AlgorithmId> parse_algorithm(std::string_view name) {
  for (int k = 0; k <= int(AlgorithmId::Auto); ++k) {
    if (name == algorithm_name(AlgorithmId(k))) return AlgorithmId(k);
  }
  return std::nullopt;
}

const char* guarantee_name(Guarantee g) {
  switch (g) {
    case Guarantee::Efx: return "EFX";
    case Guarantee::Efx0: return "EFX0";
    case Guarantee::PropMx: return "PROPMX";
    case Guarantee::PropMx0: return "PROPMX0";
    case Guarantee::Po: return "PO";
    case Guarantee::MaxSw: return "MAX_SW";
  }
  return "?";
}

Instance positive_projection(const Instance& inst, const std::vector<int>& m_plus) {
  Instance projected(inst.agents(), int(m_plus.size()));
  for (int t = 0; t < int(m_plus.size()); ++t) {
    bool any_positive = false;
    for (int i = 0; i < inst.agents(); ++i) {
      const Rational& v = inst.value(i, m_plus[t]);
      if (v.is_positive()) {
        projected.value(i, t) = v;
        any_positive = true;
      }
    }
    if (!any_positive) {
      fail(Errc::PreconditionViolated, "positive_projection: item " +
                                           std::to_string(m_plus[t]) + " is not a mixed good");
    }
  }
  return projected;
}

SolveResult alg1_restricted_goods(const Instance& inst) {
  InstanceClass cls = classify(inst);
  ItemPartition part = partition_items(inst);
  if (!cls.goods_only) precondition(AlgorithmId::Alg1RestrictedGoods, "goods_only is false");
  if (!cls.restricted_mixed_goods) {
    precondition(AlgorithmId::Alg1RestrictedGoods, "restricted_mixed_goods is false");
  }
  if (int(part.m_plus.size()) != inst.items()) {
    precondition(AlgorithmId::Alg1RestrictedGoods,
                 "every item must be valued positively by someone");
  }

  AlgState state(inst);
  TraceBuilder trace;
  for (auto [j, agent] : restricted_goods_core(inst, *cls.restricted_values)) {
    state.assign(j, agent);
    trace.assign("alg1-source", j, agent);
  }

  SolveResult result;
  result.allocation = state.allocation();
  result.algorithm = AlgorithmId::Alg1RestrictedGoods;
  result.guarantees = guarantees_of(result.algorithm, cls.binary_mixed_goods);
  result.trace = trace.take();
  return result;
}

SolveResult alg2_rmg_identical_bads(const Instance& inst) {
  InstanceClass cls = classify(inst);
  ItemPartition part = partition_items(inst);
  if (!cls.restricted_mixed_goods) {
    precondition(AlgorithmId::Alg2RmgIdenticalBads, "restricted_mixed_goods is false");
  }
  if (!cls.identical_bads) {
    precondition(AlgorithmId::Alg2RmgIdenticalBads, "identical_bads is false");
  }

  AlgState state(inst);
  TraceBuilder trace;
  run_goods_phases(state, inst, part, cls, /*binary_variant=*/false, trace);
  run_identical_bads_phase(state, inst, part, trace);

  SolveResult result;
  result.allocation = state.allocation();
  result.algorithm = AlgorithmId::Alg2RmgIdenticalBads;
  result.guarantees = guarantees_of(result.algorithm, cls.binary_mixed_goods);
  result.trace = trace.take();
  return result;
}

Allocation binary_goods_mnw(const Instance& inst) {
  int n = inst.agents();
  int m = inst.items();

  std::optional<Rational> unit;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      const Rational& v = inst.value(i, j);
      if (v.is_negative()) fail(Errc::PreconditionViolated, "binary_goods_mnw: negative value");
      if (v.is_positive()) {
        if (!unit) unit = v;
        if (*unit != v) fail(Errc::PreconditionViolated, "binary_goods_mnw: values not binary");
      }
    }
  }
  std::vector<std::vector<char>> valued(n, std::vector<char>(m, 0));
  for (int j = 0; j < m; ++j) {
    bool any = false;
    for (int i = 0; i < n; ++i) {
      if (inst.value(i, j).is_positive()) {
        valued[i][j] = 1;
        any = true;
      }
    }
    if (!any) fail(Errc::PreconditionViolated, "binary_goods_mnw: item valued by nobody");
  }

  Allocation alloc(n, m);
  std::vector<int> load(n, 0);
  for (int j = 0; j < m; ++j) {
    int pick = -1;
    for (int i = 0; i < n; ++i) {
      if (valued[i][j] && (pick < 0 || load[i] < load[pick])) pick = i;
    }
    alloc.assign(j, pick);
    ++load[pick];
  }

  // give[x][y]: items x holds that y also values; a transfer path r -> ... -> p
  // shifts one unit of utility from r to p.
  std::vector<std::vector<int>> give(n, std::vector<int>(n, 0));
  for (int j = 0; j < m; ++j) {
    int h = alloc.holder(j);
    for (int y = 0; y < n; ++y) {
      if (valued[y][j]) ++give[h][y];
    }
  }

  while (true) {
    std::vector<int> receivers(n);
    std::iota(receivers.begin(), receivers.end(), 0);
    std::sort(receivers.begin(), receivers.end(), [&](int a, int b) {
      if (load[a] != load[b]) return load[a] < load[b];
      return a < b;
    });

    bool moved = false;
    for (int p : receivers) {
      // Reverse BFS from p: next[x] = hop x takes toward p.
      std::vector<int> next(n, -1);
      next[p] = p;
      std::vector<int> queue{p};
      for (std::size_t head = 0; head < queue.size(); ++head) {
        int y = queue[head];
        for (int x = 0; x < n; ++x) {
          if (next[x] < 0 && give[x][y] > 0) {
            next[x] = y;
            queue.push_back(x);
          }
        }
      }
      int richest = -1;
      for (int x = 0; x < n; ++x) {
        if (x != p && next[x] >= 0 && (richest < 0 || load[x] > load[richest])) richest = x;
      }
      if (richest < 0 || load[richest] < load[p] + 2) continue;

      int x = richest;
      while (x != p) {
        int y = next[x];
        int item = -1;
        for (int j : alloc.bundle(x)) {
          if (valued[y][j]) {
            item = j;
            break;
          }
        }
        if (item < 0) fail(Errc::Internal, "transfer edge without a transferable item");
        alloc.unassign(item);
        alloc.assign(item, y);
        for (int z = 0; z < n; ++z) {
          if (valued[z][item]) {
            --give[x][z];
            ++give[y][z];
          }
        }
        x = y;
      }
      --load[richest];
      ++load[p];
      moved = true;
      break;
    }
    if (!moved) break;
  }
  return alloc;
}

SolveResult alg3_binary_mixed(const Instance& inst) {
  InstanceClass cls = classify(inst);
  ItemPartition part = partition_items(inst);
  if (!cls.binary_mixed_goods) {
    precondition(AlgorithmId::Alg3BinaryMixed, "binary_mixed_goods is false");
  }
  if (!cls.identical_bads) {
    precondition(AlgorithmId::Alg3BinaryMixed, "identical_bads is false");
  }

  AlgState state(inst);
  TraceBuilder trace;
  run_goods_phases(state, inst, part, cls, /*binary_variant=*/true, trace);
  run_identical_bads_phase(state, inst, part, trace);

  SolveResult result;
  result.allocation = state.allocation();
  result.algorithm = AlgorithmId::Alg3BinaryMixed;
  result.guarantees = guarantees_of(result.algorithm, true);
  result.trace = trace.take();
  return result;
}

Allocation goods_propm0(const Instance& inst) {
  int n = inst.agents();
  int m = inst.items();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (inst.value(i, j).is_negative()) {
        fail(Errc::PreconditionViolated, "goods_propm0: negative value");
      }
    }
  }

  std::vector<Rational> share(n);
  for (int i = 0; i < n; ++i) share[i] = proportional_share(inst, i);

  // suffix[i][t] = value of items t..m-1 for agent i; best_single[i] bounds
  // any achievable maximin good.
  std::vector<std::vector<Rational>> suffix(n, std::vector<Rational>(m + 1));
  std::vector<Rational> best_single(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    for (int t = m - 1; t >= 0; --t) suffix[i][t] = suffix[i][t + 1] + inst.value(i, t);
    for (int j = 0; j < m; ++j) best_single[i] = std::max(best_single[i], inst.value(i, j));
  }

  Allocation alloc(n, m);
  std::vector<Rational> current(n);

  auto leaf_ok = [&]() {
    for (int i = 0; i < n; ++i) {
      if (current[i] >= share[i]) continue;
      Rational d = maximin_good_value(inst, alloc, i, true).value_or(Rational(0));
      if (current[i] + d < share[i]) return false;
    }
    return true;
  };

  std::function<bool(int)> dfs = [&](int t) -> bool {
    if (t == m) return leaf_ok();
    for (int i = 0; i < n; ++i) {
      // Even taking all remaining items plus the best possible maximin good
      // cannot reach the share: no completion below this node works.
      if (current[i] + suffix[i][t] + best_single[i] < share[i]) return false;
    }
    for (int agent = 0; agent < n; ++agent) {
      alloc.assign(t, agent);
      current[agent] += inst.value(agent, t);
      if (dfs(t + 1)) return true;
      current[agent] -= inst.value(agent, t);
      alloc.unassign(t);
    }
    return false;
  };

  if (!dfs(0)) {
    fail(Errc::SearchExhausted, "no PropM0 allocation found (existence guarantee violated)");
  }
  return alloc;
}

IdoReduction ido_reduce(const Instance& inst) {
  ItemPartition part = partition_items(inst);
  IdoReduction red{inst, part.m_minus, {}};
  red.sigma.resize(inst.agents());
  for (int i = 0; i < inst.agents(); ++i) {
    red.sigma[i] = part.m_minus;
    std::stable_sort(red.sigma[i].begin(), red.sigma[i].end(), [&](int a, int b) {
      if (inst.value(i, a) != inst.value(i, b)) return inst.value(i, a) < inst.value(i, b);
      return a < b;
    });
    for (std::size_t t = 0; t < red.bad_items.size(); ++t) {
      red.reduced.value(i, red.bad_items[t]) = inst.value(i, red.sigma[i][t]);
    }
  }
  return red;
}

MapBackResult ido_map_back(const Instance& inst, const Allocation& reduced_alloc,
                           const IdoReduction& reduction) {
  if (!reduced_alloc.complete()) {
    fail(Errc::PreconditionViolated, "ido_map_back requires a complete reduced allocation");
  }
  MapBackResult out{Allocation(inst.agents(), inst.items()), {}};
  std::vector<char> is_bad(inst.items(), 0);
  for (int b : reduction.bad_items) is_bad[b] = 1;
  for (int j = 0; j < inst.items(); ++j) {
    if (!is_bad[j]) out.allocation.assign(j, reduced_alloc.holder(j));
  }

  std::vector<char> taken(inst.items(), 0);
  for (int t = int(reduction.bad_items.size()) - 1; t >= 0; --t) {
    int slot = reduction.bad_items[t];
    int agent = reduced_alloc.holder(slot);
    int best = -1;
    for (int e : reduction.bad_items) {
      if (taken[e]) continue;
      if (best < 0 || inst.value(agent, e) > inst.value(agent, best)) best = e;
    }
    if (best < 0) fail(Errc::Internal, "map-back ran out of bads");
    if (inst.value(agent, best) < reduction.reduced.value(agent, slot)) {
      fail(Errc::Internal, "map-back pick lost the dominance bound");
    }
    taken[best] = 1;
    out.allocation.assign(best, agent);
    out.picks.push_back({agent, best, slot});
  }
  return out;
}

SolveResult alg4_separable(const Instance& inst, const GoodsEngine& goods_engine) {
  InstanceClass cls = classify(inst);
  if (!cls.separable) precondition(AlgorithmId::Alg4Separable, "separable is false");
  ItemPartition part = partition_items(inst);

  std::vector<int> nonneg = part.m_plus;
  nonneg.insert(nonneg.end(), part.m_zero.begin(), part.m_zero.end());
  std::sort(nonneg.begin(), nonneg.end());

  Allocation goods_alloc(inst.agents(), int(nonneg.size()));
  if (!nonneg.empty()) {
    Instance goods_inst = column_subinstance(inst, nonneg);
    goods_alloc = goods_engine ? goods_engine(goods_inst) : goods_propm0(goods_inst);
  }

  auto ido_order = common_ascending_order(inst, part.m_minus);
  std::optional<IdoReduction> reduction;
  const Instance* working = &inst;
  std::vector<int> bad_order;
  if (ido_order) {
    bad_order = *ido_order;
  } else {
    reduction = ido_reduce(inst);
    working = &reduction->reduced;
    bad_order = reduction->bad_items;  // ascending slots are the IDO order
  }

  AlgState state(*working);
  TraceBuilder trace;
  for (int t = 0; t < int(nonneg.size()); ++t) {
    state.assign(nonneg[t], goods_alloc.holder(t));
    trace.assign("goods-propm0", nonneg[t], goods_alloc.holder(t));
  }
  run_top_sink_bads_phase(state, bad_order, trace);

  SolveResult result;
  if (reduction) {
    MapBackResult mapped = ido_map_back(inst, state.allocation(), *reduction);
    result.allocation = std::move(mapped.allocation);
    for (const auto& pick : mapped.picks) {
      trace.assign("ido-map-back", pick.real_item, pick.agent);
    }
  } else {
    result.allocation = state.allocation();
  }
  result.algorithm = AlgorithmId::Alg4Separable;
  result.guarantees = guarantees_of(result.algorithm, cls.binary_mixed_goods);
  result.trace = trace.take();
  return result;
}

SolveResult alg5_rmg_ido_bads(const Instance& inst) {
  InstanceClass cls = classify(inst);
  ItemPartition part = partition_items(inst);
  if (!cls.restricted_mixed_goods) {
    precondition(AlgorithmId::Alg5RmgIdoBads, "restricted_mixed_goods is false");
  }
  if (!cls.ido_bads) precondition(AlgorithmId::Alg5RmgIdoBads, "ido_bads is false");

  AlgState state(inst);
  TraceBuilder trace;
  run_goods_phases(state, inst, part, cls, cls.binary_mixed_goods, trace);
  run_top_sink_bads_phase(state, *common_ascending_order(inst, part.m_minus), trace);

  SolveResult result;
  result.allocation = state.allocation();
  result.algorithm = AlgorithmId::Alg5RmgIdoBads;
  result.guarantees = guarantees_of(result.algorithm, cls.binary_mixed_goods);
  result.trace = trace.take();
  return result;
}

SolveResult alg6_rmg_general_bads(const Instance& inst) {
  InstanceClass cls = classify(inst);
  if (!cls.restricted_mixed_goods) {
    precondition(AlgorithmId::Alg6RmgGeneralBads, "restricted_mixed_goods is false");
  }

  IdoReduction reduction = ido_reduce(inst);
  const Instance& working = reduction.reduced;
  ItemPartition part = partition_items(working);

  AlgState state(working);
  TraceBuilder trace;
  run_goods_phases(state, working, part, classify(working), cls.binary_mixed_goods, trace);
  run_top_sink_bads_phase(state, reduction.bad_items, trace);

  MapBackResult mapped = ido_map_back(inst, state.allocation(), reduction);
  for (const auto& pick : mapped.picks) {
    trace.assign("ido-map-back", pick.real_item, pick.agent);
  }

  SolveResult result;
  result.allocation = std::move(mapped.allocation);
  result.algorithm = AlgorithmId::Alg6RmgGeneralBads;
  result.guarantees = guarantees_of(result.algorithm, cls.binary_mixed_goods);
  result.trace = trace.take();
  return result;
}

AlgorithmId resolve_algorithm(const InstanceClass& cls, const ItemPartition& part,
                              int item_count) {
  bool pure_restricted_goods = cls.goods_only && cls.restricted_mixed_goods &&
                               int(part.m_plus.size()) == item_count;
  if (cls.binary_mixed_goods && cls.identical_bads) return AlgorithmId::Alg3BinaryMixed;
  if (pure_restricted_goods) return AlgorithmId::Alg1RestrictedGoods;
  if (cls.restricted_mixed_goods && cls.identical_bads) return AlgorithmId::Alg2RmgIdenticalBads;
  if (cls.restricted_mixed_goods && cls.ido_bads) return AlgorithmId::Alg5RmgIdoBads;
  if (cls.restricted_mixed_goods) return AlgorithmId::Alg6RmgGeneralBads;
  if (cls.separable) return AlgorithmId::Alg4Separable;
  fail(Errc::NoApplicableAlgorithm,
       "instance is neither restricted-mixed-goods nor separable");
}

namespace {

SolveResult run_algorithm(const Instance& inst, AlgorithmId id, const GoodsEngine& engine) {
  switch (id) {
    case AlgorithmId::Alg1RestrictedGoods: return alg1_restricted_goods(inst);
    case AlgorithmId::Alg2RmgIdenticalBads: return alg2_rmg_identical_bads(inst);
    case AlgorithmId::Alg3BinaryMixed: return alg3_binary_mixed(inst);
    case AlgorithmId::Alg4Separable: return alg4_separable(inst, engine);
    case AlgorithmId::Alg5RmgIdoBads: return alg5_rmg_ido_bads(inst);
    case AlgorithmId::Alg6RmgGeneralBads: return alg6_rmg_general_bads(inst);
    default: fail(Errc::Internal, "cannot run AUTO directly");
  }
}

}  // namespace

SolveResult solve(const Instance& inst, AlgorithmId which, const GoodsEngine& goods_engine) {
  ActiveAgents agents = preprocess_nonpositive_agents(inst);
  std::vector<int> active = agents.active;
  if (inst.items() == 0) {
    // Nothing to allocate; nobody needs to be frozen.
    active.resize(inst.agents());
    std::iota(active.begin(), active.end(), 0);
  }

  Instance sub = row_subinstance(inst, active);
  InstanceClass cls = classify(sub);
  ItemPartition part = partition_items(sub);
  AlgorithmId id =
      which == AlgorithmId::Auto ? resolve_algorithm(cls, part, sub.items()) : which;
  SolveResult sub_result = run_algorithm(sub, id, goods_engine);

  SolveResult result;
  result.allocation = Allocation(inst.agents(), inst.items());
  for (int si = 0; si < int(active.size()); ++si) {
    for (int item : sub_result.allocation.bundle(si)) {
      result.allocation.assign(item, active[si]);
    }
  }
  result.algorithm = id;
  result.guarantees = sub_result.guarantees;
  result.active_agents = active;
  result.trace = std::move(sub_result.trace);
  for (TraceStep& step : result.trace) {
    if (step.agent >= 0) step.agent = active[step.agent];
    for (int& a : step.cycle) a = active[a];
  }

  verify_guarantees(inst, result);
  return result;
}

void verify_guarantees(const Instance& inst, const SolveResult& result) {
  Instance sub = row_subinstance(inst, result.active_agents);
  Allocation sub_alloc(sub.agents(), inst.items());
  for (int si = 0; si < int(result.active_agents.size()); ++si) {
    for (int item : result.allocation.bundle(result.active_agents[si])) {
      sub_alloc.assign(item, si);
    }
  }

  for (Guarantee g : result.guarantees) {
    bool ok = true;
    switch (g) {
      case Guarantee::Efx: ok = check_efx(sub, sub_alloc, false).holds; break;
      case Guarantee::Efx0: ok = check_efx(sub, sub_alloc, true).holds; break;
      case Guarantee::PropMx:
        ok = check_prop_family(inst, result.allocation, FairnessNotion::PROPMX).holds;
        break;
      case Guarantee::PropMx0:
        ok = check_prop_family(inst, result.allocation, FairnessNotion::PROPMX0).holds;
        break;
      case Guarantee::Po: ok = check_po_sufficient(sub, sub_alloc); break;
      case Guarantee::MaxSw:
        ok = social_welfare(sub, sub_alloc) == max_social_welfare_bound(sub);
        break;
    }
    if (!ok) {
      fail(Errc::GuaranteeViolated, std::string(algorithm_name(result.algorithm)) +
                                        " output failed its claimed " + guarantee_name(g));
    }
  }
}

}  // namespace manna
