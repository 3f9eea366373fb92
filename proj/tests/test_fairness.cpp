#include <doctest.h>

#include "manna/fairness.hpp"
#include "manna/oracle.hpp"
#include "support.hpp"

using namespace manna;
using testsupport::a1_instance;
using testsupport::a2_instance;
using testsupport::make_allocation;
using testsupport::make_instance;

namespace {

// g1,g3 to a and g2 to b: the PO side of the impossibility fixture.
Allocation a2_po_allocation() { return make_allocation(a2_instance(), {{0, 2}, {1}}); }

// The balanced split ({g1,g4},{g2,g5},{g3}) of the identical-goods fixture.
Allocation a1_balanced() { return make_allocation(a1_instance(), {{0, 3}, {1, 4}, {2}}); }

}  // namespace

TEST_CASE("envy is a strict exact comparison") {
  Instance inst = a2_instance();
  Allocation alloc = a2_po_allocation();
  CHECK(envies(inst, alloc, 1, 0));
  CHECK_FALSE(envies(inst, alloc, 0, 1));

  Instance equal = make_instance({{1, 1}, {1, 1}});
  Allocation even = make_allocation(equal, {{0}, {1}});
  CHECK_FALSE(envies(equal, even, 0, 1));
  CHECK_FALSE(envies(equal, even, 1, 0));

  Allocation nothing(inst.agents(), inst.items());
  for (int i = 0; i < 2; ++i) {
    for (int h = 0; h < 2; ++h) {
      if (i != h) CHECK_FALSE(envies(inst, nothing, i, h));
    }
  }
}

TEST_CASE("the maximin good over rival bundles") {
  // d_b = 0 via g1 in the zero-inclusive mode.
  auto d = maximin_good_value(a2_instance(), a2_po_allocation(), 1, true);
  REQUIRE(d.has_value());
  CHECK(*d == Rational(0));

  Instance solo = make_instance({{5, 1}});
  CHECK_FALSE(maximin_good_value(solo, make_allocation(solo, {{0, 1}}), 0, false).has_value());

  auto d_c = maximin_good_value(a1_instance(), a1_balanced(), 2, false);
  REQUIRE(d_c.has_value());
  CHECK(*d_c == Rational(3));
}

TEST_CASE("EFX holds for the balanced identical-goods allocation") {
  CHECK(check_efx(a1_instance(), a1_balanced(), false).holds);
}

TEST_CASE("EFX is vacuous for a single agent") {
  Instance solo = make_instance({{2, -1}});
  CHECK(check_efx(solo, make_allocation(solo, {{0, 1}}), false).holds);
  CHECK(check_efx(solo, make_allocation(solo, {{0, 1}}), true).holds);
}

TEST_CASE("one shared good between two agents is EFX and EFX0") {
  Instance inst = make_instance({{1}, {1}});
  Allocation alloc = make_allocation(inst, {{0}, {}});
  CHECK(check_efx(inst, alloc, false).holds);
  CHECK(check_efx(inst, alloc, true).holds);
}

TEST_CASE("EFX0 rejects allocations saved only by a zero-valued removal") {
  // b envies a; removing g3 (positive for b) saves EFX, but removing the
  // zero-valued g1 does not, so EFX0 fails.
  Instance inst = a2_instance();
  Allocation alloc = a2_po_allocation();
  CHECK(check_efx(inst, alloc, false).holds);
  FairnessReport rep = check_efx(inst, alloc, true);
  CHECK_FALSE(rep.holds);
  REQUIRE(rep.witnesses.size() == 1);
  CHECK(rep.witnesses[0].agent == 1);
}

TEST_CASE("the balanced identical-goods allocation fails PropX at agent c") {
  FairnessReport rep = check_prop_family(a1_instance(), a1_balanced(), FairnessNotion::PROPX);
  CHECK_FALSE(rep.holds);
  REQUIRE(rep.witnesses.size() == 1);
  CHECK(rep.witnesses[0].agent == 2);
}

TEST_CASE("the PO allocation of the restricted-goods fixture fails PropM0 at agent b") {
  FairnessReport rep =
      check_prop_family(a2_instance(), a2_po_allocation(), FairnessNotion::PROPM0);
  CHECK_FALSE(rep.holds);
  REQUIRE(rep.witnesses.size() == 1);
  CHECK(rep.witnesses[0].agent == 1);
  // PropM (strict maximin) is satisfied here: d_b = 2 via g3.
  CHECK(check_prop_family(a2_instance(), a2_po_allocation(), FairnessNotion::PROPM).holds);
}

TEST_CASE("a single agent receiving everything meets Prop with equality") {
  Instance solo = make_instance({{4, -1}});
  Allocation all = make_allocation(solo, {{0, 1}});
  CHECK(check_prop_family(solo, all, FairnessNotion::PROP).holds);
  CHECK(bundle_value(solo, 0, all.bundle(0)) == proportional_share(solo, 0));
}

TEST_CASE("goods-only and bads-only notions reject other classes") {
  Instance mixed = make_instance({{2, -1}, {-1, 2}});
  Allocation alloc = make_allocation(mixed, {{0}, {1}});
  for (FairnessNotion n :
       {FairnessNotion::PROPM, FairnessNotion::PROPM0, FairnessNotion::PROPX}) {
    try {
      check_prop_family(mixed, alloc, n);
      FAIL("expected NOTION_INAPPLICABLE");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotionInapplicable);
    }
  }
  CHECK(check_prop_family(mixed, alloc, FairnessNotion::PROPMX).holds);
}

TEST_CASE("PropX for bads quantifies over every own bad") {
  Instance bads = make_instance({{-1, -4}, {-1, -4}});
  // Both bads on agent 0: dropping the -1 leaves -4 < -5/2.
  CHECK_FALSE(
      check_prop_family(bads, make_allocation(bads, {{0, 1}, {}}), FairnessNotion::PROPX).holds);
  CHECK(check_prop_family(bads, make_allocation(bads, {{1}, {0}}), FairnessNotion::PROPX).holds);
}

TEST_CASE("welfare numbers for the restricted-goods fixture") {
  CHECK(social_welfare(a2_instance(), a2_po_allocation()) == Rational(4));
  Allocation nothing(2, 3);
  CHECK(social_welfare(a2_instance(), nothing) == Rational(0));

  Instance binary = make_instance({{1, 1, 1}, {1, 1, 1}});
  NashSignature sig = nash_welfare_signature(binary, make_allocation(binary, {{0, 1}, {2}}));
  CHECK(sig.nonpositive == 0);
  CHECK(sig.product_str() == "2");
}

TEST_CASE("nash signatures order by nonpositive count first") {
  NashSignature a;
  a.nonpositive = 0;
  a.product_num = 2;
  NashSignature b;
  b.nonpositive = 1;
  b.product_num = 100;
  CHECK(a.compare(b) > 0);
  CHECK(b.compare(a) < 0);
  NashSignature c;
  c.nonpositive = 0;
  c.product_num = 3;
  CHECK(c.compare(a) > 0);
  CHECK(a.compare(a) == 0);
}

TEST_CASE("the argmax sufficiency check for PO") {
  CHECK(check_po_sufficient(a2_instance(), a2_po_allocation()));
  CHECK_FALSE(check_po_sufficient(a2_instance(), make_allocation(a2_instance(), {{1}, {0, 2}})));
  CHECK(check_po_sufficient(Instance(2, 0), Allocation(2, 0)));
}

TEST_CASE("EFX0 implies EFX and PropMX0 implies PropMX on random pairs") {
  SplitMix64 rng(31);
  for (int round = 0; round < 400; ++round) {
    Instance inst = testsupport::random_instance(rng);
    Allocation alloc = testsupport::random_allocation(rng, inst);
    if (check_efx(inst, alloc, true).holds) CHECK(check_efx(inst, alloc, false).holds);
    if (check_prop_family(inst, alloc, FairnessNotion::PROPMX0).holds) {
      CHECK(check_prop_family(inst, alloc, FairnessNotion::PROPMX).holds);
    }
    if (check_ef(inst, alloc).holds) CHECK(check_efx(inst, alloc, true).holds);
  }
}

TEST_CASE("EFX implies PropMX on random pairs") {
  SplitMix64 rng(32);
  for (int round = 0; round < 400; ++round) {
    Instance inst = testsupport::random_instance(rng);
    Allocation alloc = testsupport::random_allocation(rng, inst);
    if (check_efx(inst, alloc, false).holds) {
      CHECK(check_prop_family(inst, alloc, FairnessNotion::PROPMX).holds);
    }
    if (check_efx(inst, alloc, true).holds) {
      CHECK(check_prop_family(inst, alloc, FairnessNotion::PROPMX0).holds);
    }
  }
}

TEST_CASE("Prop implies every applicable relaxation") {
  SplitMix64 rng(33);
  for (int round = 0; round < 300; ++round) {
    Instance inst = testsupport::random_instance(rng);
    Allocation alloc = testsupport::random_allocation(rng, inst);
    if (!check_prop_family(inst, alloc, FairnessNotion::PROP).holds) continue;
    CHECK(check_prop_family(inst, alloc, FairnessNotion::PROPMX).holds);
    CHECK(check_prop_family(inst, alloc, FairnessNotion::PROPMX0).holds);
    InstanceClass cls = classify(inst);
    if (cls.goods_only) {
      CHECK(check_prop_family(inst, alloc, FairnessNotion::PROPM).holds);
      CHECK(check_prop_family(inst, alloc, FairnessNotion::PROPM0).holds);
      CHECK(check_prop_family(inst, alloc, FairnessNotion::PROPX).holds);
    } else if (cls.bads_only) {
      CHECK(check_prop_family(inst, alloc, FairnessNotion::PROPX).holds);
    }
  }
}

TEST_CASE("PropM0 implies PropM on random goods instances") {
  SplitMix64 rng(34);
  for (int round = 0; round < 300; ++round) {
    Instance inst = testsupport::random_instance(rng, 4, 6, 0, 9);
    Allocation alloc = testsupport::random_allocation(rng, inst);
    if (check_prop_family(inst, alloc, FairnessNotion::PROPM0).holds) {
      CHECK(check_prop_family(inst, alloc, FairnessNotion::PROPM).holds);
    }
  }
}

TEST_CASE("argmax allocations are oracle-PO with maximal welfare at desk scale") {
  SplitMix64 rng(35);
  int verified = 0;
  for (int round = 0; round < 60; ++round) {
    Instance inst = testsupport::random_instance(rng, 3, 5);
    // canonical argmax assignment: every item to its lowest-index maximizer
    Allocation alloc(inst.agents(), inst.items());
    for (int j = 0; j < inst.items(); ++j) {
      int best = 0;
      for (int i = 1; i < inst.agents(); ++i) {
        if (inst.value(i, j) > inst.value(best, j)) best = i;
      }
      alloc.assign(j, best);
    }
    REQUIRE(check_po_sufficient(inst, alloc));
    CHECK(is_pareto_optimal_exact(inst, alloc));
    CHECK(social_welfare(inst, alloc) == max_sw_exact(inst).value);
    CHECK(social_welfare(inst, alloc) == max_social_welfare_bound(inst));
    ++verified;
  }
  CHECK(verified == 60);
}
