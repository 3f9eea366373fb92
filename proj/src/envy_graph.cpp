#include "manna/envy_graph.hpp"

#include <algorithm>

namespace manna {

bool EnvyGraph::has_edge(int from, int to) const {
  const auto& adj = edges[from];
  return std::binary_search(adj.begin(), adj.end(), to);
}

EnvyGraph build_envy_graph(const Instance& inst, const Allocation& alloc, EnvyMode mode) {
  int n = alloc.agents();
  std::vector<std::vector<Rational>> cross(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    for (int h = 0; h < n; ++h) cross[i][h] = bundle_value(inst, i, alloc.bundle(h));
  }
  return build_envy_graph_from_cross(cross, mode);
}

EnvyGraph build_envy_graph_from_cross(const std::vector<std::vector<Rational>>& cross,
                                      EnvyMode mode) {
  int n = int(cross.size());
  EnvyGraph graph;
  graph.mode = mode;
  graph.edges.resize(n);
  for (int i = 0; i < n; ++i) {
    if (mode == EnvyMode::Plain) {
      for (int h = 0; h < n; ++h) {
        if (h != i && cross[i][i] < cross[i][h]) graph.edges[i].push_back(h);
      }
    } else {
      std::optional<Rational> best;
      for (int h = 0; h < n; ++h) {
        if (h == i) continue;
        if (!best || cross[i][h] > *best) best = cross[i][h];
      }
      if (best && cross[i][i] < *best) {
        for (int h = 0; h < n; ++h) {
          if (h != i && cross[i][h] == *best) graph.edges[i].push_back(h);
        }
      }
    }
  }
  return graph;
}

std::optional<int> find_source(const EnvyGraph& graph, const std::vector<int>& restrict_to) {
  std::vector<char> member(graph.nodes(), 0);
  for (int v : restrict_to) member[v] = 1;
  std::vector<char> envied(graph.nodes(), 0);
  for (int u : restrict_to) {
    for (int v : graph.edges[u]) {
      if (member[v]) envied[v] = 1;
    }
  }
  std::vector<int> sorted = restrict_to;
  std::sort(sorted.begin(), sorted.end());
  for (int v : sorted) {
    if (!envied[v]) return v;
  }
  return std::nullopt;
}

std::optional<int> find_sink(const EnvyGraph& graph) {
  for (int v = 0; v < graph.nodes(); ++v) {
    if (graph.edges[v].empty()) return v;
  }
  return std::nullopt;
}

std::optional<std::vector<int>> find_cycle(const EnvyGraph& graph) {
  int n = graph.nodes();
  std::vector<int> color(n, 0);  // 0 unseen, 1 on stack, 2 done
  std::vector<int> stack;

  // Iterative DFS keeping per-node edge cursors; starts from the lowest
  // unexplored node, visits neighbours in ascending order.
  std::vector<std::size_t> cursor(n, 0);
  for (int start = 0; start < n; ++start) {
    if (color[start] != 0) continue;
    stack.push_back(start);
    color[start] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      if (cursor[u] < graph.edges[u].size()) {
        int v = graph.edges[u][cursor[u]++];
        if (color[v] == 0) {
          color[v] = 1;
          stack.push_back(v);
        } else if (color[v] == 1) {
          auto it = std::find(stack.begin(), stack.end(), v);
          return std::vector<int>(it, stack.end());
        }
      } else {
        color[u] = 2;
        stack.pop_back();
      }
    }
  }
  return std::nullopt;
}

Allocation rotate_cycle(const Instance& inst, const Allocation& alloc, const EnvyGraph& graph,
                        const std::vector<int>& cycle) {
  if (cycle.size() < 2) fail(Errc::NotACycle, "cycle must involve at least two agents");
  std::vector<char> seen(alloc.agents(), 0);
  for (int v : cycle) {
    if (v < 0 || v >= alloc.agents() || seen[v]) fail(Errc::NotACycle, "agent list is not simple");
    seen[v] = 1;
  }
  for (std::size_t t = 0; t < cycle.size(); ++t) {
    int from = cycle[t];
    int to = cycle[(t + 1) % cycle.size()];
    if (!graph.has_edge(from, to)) {
      fail(Errc::NotACycle, "missing envy edge " + std::to_string(from) + "->" +
                                std::to_string(to));
    }
  }

  std::vector<std::vector<int>> bundles = alloc.bundles();
  for (std::size_t t = 0; t < cycle.size(); ++t) {
    bundles[cycle[t]] = alloc.bundle(cycle[(t + 1) % cycle.size()]);
  }
  Allocation rotated(alloc.agents(), alloc.items());
  rotated.set_bundles(std::move(bundles));

  for (int v : cycle) {
    if (bundle_value(inst, v, rotated.bundle(v)) <= bundle_value(inst, v, alloc.bundle(v))) {
      fail(Errc::Internal, "cycle rotation failed to improve agent " + std::to_string(v));
    }
  }
  return rotated;
}

std::string to_dot(const EnvyGraph& graph) {
  std::string out = "digraph envy {\n";
  for (int v = 0; v < graph.nodes(); ++v) {
    out += "  " + std::to_string(v) + ";\n";
  }
  for (int u = 0; u < graph.nodes(); ++u) {
    for (int v : graph.edges[u]) {
      out += "  " + std::to_string(u) + " -> " + std::to_string(v) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace manna
