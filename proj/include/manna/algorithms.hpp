#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "manna/core.hpp"
#include "manna/envy_graph.hpp"

namespace manna {

enum class AlgorithmId {
  Alg1RestrictedGoods,
  Alg2RmgIdenticalBads,
  Alg3BinaryMixed,
  Alg4Separable,
  Alg5RmgIdoBads,
  Alg6RmgGeneralBads,
  Auto,
};

const char* algorithm_name(AlgorithmId id);
std::optional<AlgorithmId> parse_algorithm(std::string_view name);

// Properties an algorithm promises for the allocation it produces.
enum class Guarantee { Efx, Efx0, PropMx, PropMx0, Po, MaxSw };

const char* guarantee_name(Guarantee g);

struct TraceStep {
  int step = 0;
  std::string rule;
  int item = -1;
  int agent = -1;
  std::vector<int> cycle;  // set for rotation records only
};

struct SolveResult {
  Allocation allocation;
  AlgorithmId algorithm = AlgorithmId::Auto;
  std::vector<Guarantee> guarantees;
  std::vector<TraceStep> trace;
  std::vector<int> active_agents;
};

// Mixed-goods columns clamped at zero: v'_ij = v_ij when positive, else 0.
// `m_plus` must be the instance's M+ in ascending order; the result is a
// goods instance over those columns.
Instance positive_projection(const Instance& inst, const std::vector<int>& m_plus);

// Descending-value source assignment for pure restricted goods.
// EFX + PO + max social welfare.
SolveResult alg1_restricted_goods(const Instance& inst);

// Restricted mixed goods with identical pure bads: projected restricted-goods
// phase, dummies to a zero valuer, bads most-painful-first to envy-graph
// sinks. EFX + PropMX + PO + max SW.
SolveResult alg2_rmg_identical_bads(const Instance& inst);

// Nash-welfare maximizing allocation of a binary goods instance (values in
// {0, a}); every item lands with an agent valuing it at a. EFX0 + PO.
// Greedy seeding followed by transfer paths in the agent exchange graph
// until the utility profile has no balancing move left.
Allocation binary_goods_mnw(const Instance& inst);

// Binary mixed goods with identical bads; strengthens alg2 to EFX0/PropMX0
// via the MNW phase and source-constrained dummy placement.
SolveResult alg3_binary_mixed(const Instance& inst);

// PropM0 allocation of a goods instance. Exact search: first allocation in
// lexicographic item->agent order passing the PropM0 checker (guaranteed to
// exist). Swappable with a polynomial engine via GoodsEngine.
Allocation goods_propm0(const Instance& inst);

using GoodsEngine = std::function<Allocation(const Instance&)>;

// Separable instances: PropM0 goods phase, then worst-first bad placement on
// top-envy-graph sinks (through the IDO reduction when needed). PropMX0.
SolveResult alg4_separable(const Instance& inst, const GoodsEngine& goods_engine = {});

// Per-agent reordering of the pure-bad columns so every agent's bads are
// ascending (worst first): v'_ij = v_{i sigma_i(j)}.
struct IdoReduction {
  Instance reduced;
  std::vector<int> bad_items;             // M- positions hosting the reduced bads
  std::vector<std::vector<int>> sigma;    // sigma[i][t] = real bad, t-th worst for agent i
};

IdoReduction ido_reduce(const Instance& inst);

struct MapBackResult {
  Allocation allocation;
  struct Pick {
    int agent;
    int real_item;
    int reduced_item;
  };
  std::vector<Pick> picks;  // in pick order (least painful reduced bad first)
};

// Replays a complete allocation of the reduced instance onto the real bads:
// holders pick their favourite unallocated bad from the least painful
// reduced slot down. Asserts the matched-bad dominance from the reduction
// argument.
MapBackResult ido_map_back(const Instance& inst, const Allocation& reduced_alloc,
                           const IdoReduction& reduction);

// Restricted mixed goods with IDO bads: alg2 (alg3 when binary) phases, then
// worst-first bads on top-envy sinks with cycle elimination. EFX, and EFX0
// for binary goods; no PO claim.
SolveResult alg5_rmg_ido_bads(const Instance& inst);

// Restricted mixed goods, general bads: IDO reduction around the alg5 bad
// phase. PropMX, and PropMX0 for binary goods; neither EFX nor PO claimed.
SolveResult alg6_rmg_general_bads(const Instance& inst);

// Dispatch table used by Auto, strongest applicable guarantee first.
AlgorithmId resolve_algorithm(const InstanceClass& cls, const ItemPartition& part,
                              int item_count);

// Preprocesses non-positive agents, dispatches, maps the sub-solution back
// over all agents, and re-checks every claimed guarantee (GUARANTEE_VIOLATED
// on any mismatch, which would indicate a bug).
SolveResult solve(const Instance& inst, AlgorithmId which = AlgorithmId::Auto,
                  const GoodsEngine& goods_engine = {});

// Claimed-guarantee recheck used by solve; envy and efficiency claims are
// evaluated over the active agents (the scope of the stated guarantees),
// proportionality
// claims over the full instance.
void verify_guarantees(const Instance& inst, const SolveResult& result);

}  // namespace manna
