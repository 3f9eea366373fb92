#include <doctest.h>

#include "manna/core.hpp"
#include "support.hpp"

using namespace manna;
using testsupport::a1_instance;
using testsupport::a2_instance;
using testsupport::make_instance;

TEST_CASE("partition splits an all-goods fixture into M+ only") {
  ItemPartition part = partition_items(a2_instance());
  CHECK(part.m_plus == std::vector<int>{0, 1, 2});
  CHECK(part.m_zero.empty());
  CHECK(part.m_minus.empty());
}

TEST_CASE("partition of an all-negative matrix is pure bads") {
  ItemPartition part = partition_items(make_instance({{-1, -1}, {-1, -2}}));
  CHECK(part.m_plus.empty());
  CHECK(part.m_zero.empty());
  CHECK(part.m_minus == std::vector<int>{0, 1});
}

TEST_CASE("partition separates dummies from pure bads") {
  ItemPartition part = partition_items(make_instance({{0, -1}, {-2, -1}}));
  CHECK(part.m_plus.empty());
  CHECK(part.m_zero == std::vector<int>{0});
  CHECK(part.m_minus == std::vector<int>{1});
}

TEST_CASE("partition predicates re-verify item-wise on random instances") {
  SplitMix64 rng(21);
  for (int round = 0; round < 300; ++round) {
    Instance inst = testsupport::random_instance(rng);
    ItemPartition part = partition_items(inst);
    std::vector<int> seen(inst.items(), 0);
    for (int j : part.m_plus) {
      ++seen[j];
      bool any_pos = false;
      for (int i = 0; i < inst.agents(); ++i) any_pos |= inst.value(i, j).is_positive();
      CHECK(any_pos);
    }
    for (int j : part.m_zero) {
      ++seen[j];
      bool any_zero = false;
      for (int i = 0; i < inst.agents(); ++i) {
        CHECK(!inst.value(i, j).is_positive());
        any_zero |= inst.value(i, j).is_zero();
      }
      CHECK(any_zero);
    }
    for (int j : part.m_minus) {
      ++seen[j];
      for (int i = 0; i < inst.agents(); ++i) CHECK(inst.value(i, j).is_negative());
    }
    for (int j = 0; j < inst.items(); ++j) CHECK(seen[j] == 1);
  }
}

TEST_CASE("classify recognizes the restricted-goods fixture as non-binary") {
  InstanceClass cls = classify(a2_instance());
  CHECK(cls.goods_only);
  CHECK(cls.separable);
  CHECK(cls.restricted_mixed_goods);
  CHECK_FALSE(cls.binary_mixed_goods);
  REQUIRE(cls.restricted_values.has_value());
  CHECK((*cls.restricted_values)[0] == Rational(1));
  CHECK((*cls.restricted_values)[1] == Rational(1));
  CHECK((*cls.restricted_values)[2] == Rational(2));
}

TEST_CASE("classify recognizes the identical-goods fixture") {
  InstanceClass cls = classify(a1_instance());
  CHECK(cls.identical_all);
  CHECK(cls.ido_all);
  CHECK(cls.goods_only);
  CHECK(cls.restricted_mixed_goods);
  CHECK_FALSE(cls.binary_mixed_goods);
}

TEST_CASE("classify of an empty item set is vacuously everything") {
  InstanceClass cls = classify(Instance(2, 0));
  CHECK(cls.goods_only);
  CHECK(cls.bads_only);
  CHECK(cls.separable);
  CHECK(cls.restricted_mixed_goods);
  CHECK(cls.binary_mixed_goods);
  CHECK(cls.ido_bads);
  CHECK(cls.identical_bads);
  CHECK(cls.ido_all);
  CHECK(cls.identical_all);
}

TEST_CASE("classify flag implications hold on random instances") {
  SplitMix64 rng(22);
  for (int round = 0; round < 300; ++round) {
    InstanceClass cls = classify(testsupport::random_instance(rng));
    if (cls.binary_mixed_goods) CHECK(cls.restricted_mixed_goods);
    if (cls.identical_bads) CHECK(cls.ido_bads);
    if (cls.identical_all) CHECK(cls.ido_all);
  }
}

TEST_CASE("classify detects IDO bads that need reordering per agent") {
  // Orders agree even though cardinal values differ.
  Instance ido = make_instance({{-1, -3}, {-2, -5}});
  CHECK(classify(ido).ido_bads);
  CHECK_FALSE(classify(ido).identical_bads);
  // Tied column for one agent, strict for the other; a common order exists.
  Instance tied = make_instance({{-1, -1}, {-1, -2}});
  CHECK(classify(tied).ido_bads);
  Instance clash = make_instance({{-1, -3}, {-3, -1}});
  CHECK_FALSE(classify(clash).ido_bads);
}

TEST_CASE("proportional shares match the fixture arithmetic") {
  for (int i = 0; i < 3; ++i) CHECK(proportional_share(a1_instance(), i) == Rational(13, 3));
  CHECK(proportional_share(a2_instance(), 0) == Rational(3, 2));
  CHECK(proportional_share(a2_instance(), 1) == Rational(3, 2));
  CHECK(proportional_share(make_instance({{5, -2}}), 0) == Rational(3));
}

TEST_CASE("n times the proportional share is the total value") {
  SplitMix64 rng(23);
  for (int round = 0; round < 200; ++round) {
    Instance inst = testsupport::random_instance(rng);
    for (int i = 0; i < inst.agents(); ++i) {
      CHECK(proportional_share(inst, i) * Rational(inst.agents()) == inst.total(i));
    }
  }
}

TEST_CASE("bundle values are exact additive sums") {
  std::vector<int> just_g2{1};
  CHECK(bundle_value(a2_instance(), 1, just_g2) == Rational(1));
  CHECK(bundle_value(a2_instance(), 0, std::vector<int>{}) == Rational(0));
  std::vector<int> g3_g5{2, 4};
  CHECK(bundle_value(a1_instance(), 2, g3_g5) == Rational(4));
}

TEST_CASE("bundle value is additive over disjoint bundles") {
  SplitMix64 rng(24);
  for (int round = 0; round < 200; ++round) {
    Instance inst = testsupport::random_instance(rng);
    if (inst.items() < 2) continue;
    // a random allocation partitions the items into disjoint bundles
    Allocation split = testsupport::random_allocation(rng, inst);
    for (int i = 0; i < inst.agents(); ++i) {
      Rational via_parts;
      std::vector<int> all;
      for (int h = 0; h < inst.agents(); ++h) {
        via_parts += bundle_value(inst, i, split.bundle(h));
        all.insert(all.end(), split.bundle(h).begin(), split.bundle(h).end());
      }
      std::sort(all.begin(), all.end());
      CHECK(via_parts == bundle_value(inst, i, all));
      CHECK(via_parts == inst.total(i));
    }
  }
}

TEST_CASE("agents with non-positive totals are frozen") {
  Instance inst = make_instance({{4, 5, -1}, {-2, -2, -2}});
  ActiveAgents agents = preprocess_nonpositive_agents(inst);
  CHECK(agents.active == std::vector<int>{0});
  CHECK(agents.inactive == std::vector<int>{1});
}

TEST_CASE("the restricted-goods fixture keeps both agents active") {
  ActiveAgents agents = preprocess_nonpositive_agents(a2_instance());
  CHECK(agents.active.size() == 2);
  CHECK(agents.inactive.empty());
}

TEST_CASE("a manna nobody wants raises ALL_AGENTS_INACTIVE") {
  try {
    preprocess_nonpositive_agents(make_instance({{-1}}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::AllAgentsInactive);
  }
}

TEST_CASE("an empty manna leaves everyone inactive without an error") {
  ActiveAgents agents = preprocess_nonpositive_agents(Instance(3, 0));
  CHECK(agents.active.empty());
  CHECK(agents.inactive.size() == 3);
}
