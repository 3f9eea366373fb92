#pragma once

#include <optional>
#include <string>
#include <vector>

#include "manna/core.hpp"

namespace manna {

enum class EnvyMode { Plain, Top };

// Directed graph over agents induced by an allocation: plain mode has an edge
// i->h whenever i envies h; top mode keeps only edges toward i's most envied
// rivals (all argmax targets on ties). Immutable snapshot; rebuild after any
// allocation change.
struct EnvyGraph {
  EnvyMode mode = EnvyMode::Plain;
  std::vector<std::vector<int>> edges;  // adjacency lists, targets ascending

  int nodes() const { return int(edges.size()); }
  bool has_edge(int from, int to) const;
};

EnvyGraph build_envy_graph(const Instance& inst, const Allocation& alloc, EnvyMode mode);

// Same graph, computed from a precomputed cross-value matrix
// cross[i][h] = v_i(x_h). Lets solvers rebuild in O(n^2).
EnvyGraph build_envy_graph_from_cross(const std::vector<std::vector<Rational>>& cross,
                                      EnvyMode mode);

// Lowest-index agent of `restrict_to` with no incoming edge from within
// `restrict_to` (induced-subgraph semantics); absent when none.
std::optional<int> find_source(const EnvyGraph& graph, const std::vector<int>& restrict_to);

// Lowest-index agent with out-degree zero; absent when none.
std::optional<int> find_sink(const EnvyGraph& graph);

// Some directed cycle in DFS order, starting the search from the lowest
// index; absent iff the graph is acyclic.
std::optional<std::vector<int>> find_cycle(const EnvyGraph& graph);

// Every agent of the cycle receives the bundle of the agent she points to;
// other bundles are untouched. The list must be a directed cycle of `graph`
// (NOT_A_CYCLE otherwise). Cycle agents' utilities strictly increase in
// plain mode, asserted here for both modes since top edges imply envy.
Allocation rotate_cycle(const Instance& inst, const Allocation& alloc, const EnvyGraph& graph,
                        const std::vector<int>& cycle);

std::string to_dot(const EnvyGraph& graph);

}  // namespace manna
