#include <doctest.h>

#include "manna/envy_graph.hpp"
#include "manna/fairness.hpp"
#include "support.hpp"

using namespace manna;
using testsupport::make_allocation;
using testsupport::make_instance;

namespace {

// Each agent holds her own item and envies exactly the next one cyclically.
struct CycleFixture {
  Instance inst = make_instance({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}});
  Allocation alloc = make_allocation(inst, {{0}, {1}, {2}});
};

}  // namespace

TEST_CASE("plain envy edges of the restricted-goods PO allocation") {
  Instance inst = testsupport::a2_instance();
  Allocation alloc = make_allocation(inst, {{0, 2}, {1}});
  EnvyGraph g = build_envy_graph(inst, alloc, EnvyMode::Plain);
  CHECK(g.edges[0].empty());
  CHECK(g.edges[1] == std::vector<int>{0});
}

TEST_CASE("an envy-free allocation builds an edgeless graph") {
  Instance inst = make_instance({{2, 0}, {0, 2}});
  EnvyGraph g = build_envy_graph(inst, make_allocation(inst, {{0}, {1}}), EnvyMode::Plain);
  for (const auto& adj : g.edges) CHECK(adj.empty());
}

TEST_CASE("a cyclic envy fixture builds a 3-cycle") {
  CycleFixture fix;
  EnvyGraph g = build_envy_graph(fix.inst, fix.alloc, EnvyMode::Plain);
  CHECK(g.edges[0] == std::vector<int>{1});
  CHECK(g.edges[1] == std::vector<int>{2});
  CHECK(g.edges[2] == std::vector<int>{0});
  for (int i = 0; i < 3; ++i) {
    int next = (i + 1) % 3;
    CHECK(envies(fix.inst, fix.alloc, i, next));
  }
}

TEST_CASE("sources respect induced-subgraph semantics and index ties") {
  Instance inst = make_instance({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  EnvyGraph edgeless = build_envy_graph(inst, Allocation(3, 3), EnvyMode::Plain);
  CHECK(find_source(edgeless, {2, 0}) == 0);

  Instance a2 = testsupport::a2_instance();
  EnvyGraph g = build_envy_graph(a2, make_allocation(a2, {{0, 2}, {1}}), EnvyMode::Plain);
  CHECK(find_source(g, {0, 1}) == 1);
  CHECK(find_source(g, {0}) == 0);  // the b->a edge leaves the induced subgraph

  CycleFixture fix;
  EnvyGraph cyc = build_envy_graph(fix.inst, fix.alloc, EnvyMode::Plain);
  CHECK_FALSE(find_source(cyc, {0, 1, 2}).has_value());
}

TEST_CASE("sinks are agents who envy nobody") {
  Instance a2 = testsupport::a2_instance();
  EnvyGraph g = build_envy_graph(a2, make_allocation(a2, {{0, 2}, {1}}), EnvyMode::Plain);
  CHECK(find_sink(g) == 0);

  EnvyGraph edgeless = build_envy_graph(a2, Allocation(2, 3), EnvyMode::Plain);
  CHECK(find_sink(edgeless) == 0);

  CycleFixture fix;
  CHECK_FALSE(find_sink(build_envy_graph(fix.inst, fix.alloc, EnvyMode::Plain)).has_value());
}

TEST_CASE("cycle detection walks the DFS order") {
  CycleFixture fix;
  auto cycle = find_cycle(build_envy_graph(fix.inst, fix.alloc, EnvyMode::Plain));
  REQUIRE(cycle.has_value());
  CHECK(*cycle == std::vector<int>{0, 1, 2});

  Instance a2 = testsupport::a2_instance();
  CHECK_FALSE(find_cycle(build_envy_graph(a2, Allocation(2, 3), EnvyMode::Plain)).has_value());
  CHECK_FALSE(
      find_cycle(build_envy_graph(a2, make_allocation(a2, {{0, 2}, {1}}), EnvyMode::Plain))
          .has_value());
}

TEST_CASE("rotating a two-cycle swaps the bundles") {
  Instance inst = make_instance({{1, 2}, {2, 1}});
  Allocation alloc = make_allocation(inst, {{0}, {1}});
  EnvyGraph g = build_envy_graph(inst, alloc, EnvyMode::Plain);
  REQUIRE(g.has_edge(0, 1));
  REQUIRE(g.has_edge(1, 0));
  Allocation rotated = rotate_cycle(inst, alloc, g, {0, 1});
  CHECK(rotated.bundle(0) == std::vector<int>{1});
  CHECK(rotated.bundle(1) == std::vector<int>{0});
  CHECK(bundle_value(inst, 0, rotated.bundle(0)) > bundle_value(inst, 0, alloc.bundle(0)));
  CHECK(bundle_value(inst, 1, rotated.bundle(1)) > bundle_value(inst, 1, alloc.bundle(1)));
}

TEST_CASE("rotation leaves agents outside the cycle untouched and raises welfare") {
  CycleFixture fix;
  Instance inst = make_instance({{0, 1, -1, 5}, {-1, 0, 1, 5}, {1, -1, 0, 5}, {0, 0, 0, 9}});
  Allocation alloc = make_allocation(inst, {{0}, {1}, {2}, {3}});
  EnvyGraph g = build_envy_graph(inst, alloc, EnvyMode::Plain);
  auto cycle = find_cycle(g);
  REQUIRE(cycle.has_value());
  Rational before = social_welfare(inst, alloc);
  Allocation rotated = rotate_cycle(inst, alloc, g, *cycle);
  CHECK(rotated.bundle(3) == std::vector<int>{3});
  CHECK(social_welfare(inst, rotated) > before);
  for (int v : *cycle) {
    CHECK(bundle_value(inst, v, rotated.bundle(v)) > bundle_value(inst, v, alloc.bundle(v)));
  }
}

TEST_CASE("a non-cycle is rejected") {
  Instance a2 = testsupport::a2_instance();
  Allocation alloc = make_allocation(a2, {{0, 2}, {1}});
  EnvyGraph g = build_envy_graph(a2, alloc, EnvyMode::Plain);
  try {
    rotate_cycle(a2, alloc, g, {0, 1});
    FAIL("expected NOT_A_CYCLE");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotACycle);
  }
}

TEST_CASE("top edges are a subset of plain edges") {
  SplitMix64 rng(41);
  for (int round = 0; round < 300; ++round) {
    Instance inst = testsupport::random_instance(rng);
    if (inst.agents() < 2) continue;
    Allocation alloc = testsupport::random_allocation(rng, inst);
    EnvyGraph plain = build_envy_graph(inst, alloc, EnvyMode::Plain);
    EnvyGraph top = build_envy_graph(inst, alloc, EnvyMode::Top);
    for (int i = 0; i < inst.agents(); ++i) {
      for (int h : top.edges[i]) CHECK(plain.has_edge(i, h));
      // an envious agent always keeps a top edge
      CHECK(top.edges[i].empty() == plain.edges[i].empty());
    }
  }
}

TEST_CASE("argmax allocations induce acyclic envy graphs") {
  SplitMix64 rng(42);
  for (int round = 0; round < 300; ++round) {
    Instance inst = testsupport::random_instance(rng);
    Allocation alloc(inst.agents(), inst.items());
    for (int j = 0; j < inst.items(); ++j) {
      int best = 0;
      for (int i = 1; i < inst.agents(); ++i) {
        if (inst.value(i, j) > inst.value(best, j)) best = i;
      }
      alloc.assign(j, best);
    }
    REQUIRE(check_po_sufficient(inst, alloc));
    CHECK_FALSE(find_cycle(build_envy_graph(inst, alloc, EnvyMode::Plain)).has_value());
  }
}

TEST_CASE("graph queries are deterministic") {
  CycleFixture fix;
  EnvyGraph g1 = build_envy_graph(fix.inst, fix.alloc, EnvyMode::Plain);
  EnvyGraph g2 = build_envy_graph(fix.inst, fix.alloc, EnvyMode::Plain);
  CHECK(g1.edges == g2.edges);
  CHECK(find_cycle(g1) == find_cycle(g2));
  std::string dot = to_dot(g1);
  CHECK(dot == to_dot(g2));
  CHECK(dot.find("0 -> 1") != std::string::npos);
}
