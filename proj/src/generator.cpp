#include "manna/generator.hpp"

#include <algorithm>
#include <string>

#include "manna/rng.hpp"

namespace manna {

namespace {

const char* kClassNames[] = {"restricted-goods", "rmg-identical", "binary-mixed",
                             "separable",        "rmg-ido",       "rmg-general"};

enum class Role { Good, Dummy, Bad };

Instance draw(const GenOptions& opt, SplitMix64& rng) {
  int n = opt.agents;
  int m = opt.items;
  Instance inst(n, m);

  if (opt.klass == GenClass::RestrictedGoods) {
    for (int j = 0; j < m; ++j) {
      Rational vj(rng.range(1, opt.hi));
      std::vector<char> interested(n, 0);
      bool any = false;
      while (!any) {
        for (int i = 0; i < n; ++i) {
          interested[i] = char(rng.chance(1, 2));
          if (interested[i]) any = true;
        }
      }
      for (int i = 0; i < n; ++i) inst.value(i, j) = interested[i] ? vj : Rational(0);
    }
    return inst;
  }

  if (opt.klass == GenClass::Separable) {
    std::vector<Role> role(m, Role::Good);
    for (int j = 0; j < m; ++j) {
      if (j >= m - opt.min_bads || rng.chance(1, 4)) role[j] = Role::Bad;
    }
    for (int j = 0; j < m; ++j) {
      for (int i = 0; i < n; ++i) {
        inst.value(i, j) = role[j] == Role::Good ? Rational(rng.range(0, opt.hi))
                                                 : Rational(rng.range(opt.lo, -1));
      }
    }
    return inst;
  }

  // Restricted mixed goods families. Binary shares one common good value.
  Rational binary_value(rng.range(1, opt.hi));
  std::vector<Role> role(m, Role::Good);
  for (int j = 0; j < m; ++j) {
    if (j >= m - opt.min_bads) {
      role[j] = Role::Bad;
    } else {
      std::uint64_t r = rng.below(10);
      role[j] = r < 8 ? Role::Good : (r < 9 ? Role::Dummy : Role::Bad);
    }
  }

  std::vector<int> bad_positions;
  for (int j = 0; j < m; ++j) {
    switch (role[j]) {
      case Role::Good: {
        Rational vj = opt.klass == GenClass::BinaryMixedGoods ? binary_value
                                                              : Rational(rng.range(1, opt.hi));
        std::vector<char> interested(n, 0);
        bool any = false;
        while (!any) {
          for (int i = 0; i < n; ++i) {
            interested[i] = char(rng.chance(1, 2));
            if (interested[i]) any = true;
          }
        }
        for (int i = 0; i < n; ++i) {
          if (interested[i]) {
            inst.value(i, j) = vj;
          } else {
            inst.value(i, j) = rng.chance(3, 4) ? Rational(0) : Rational(rng.range(opt.lo, -1));
          }
        }
        break;
      }
      case Role::Dummy: {
        bool has_zero = false;
        for (int i = 0; i < n; ++i) {
          if (rng.chance(1, 2)) {
            inst.value(i, j) = Rational(0);
            has_zero = true;
          } else {
            inst.value(i, j) = Rational(rng.range(opt.lo, -1));
          }
        }
        if (!has_zero) inst.value(int(rng.below(std::uint64_t(n))), j) = Rational(0);
        break;
      }
      case Role::Bad:
        bad_positions.push_back(j);
        break;
    }
  }

  switch (opt.klass) {
    case GenClass::RmgIdenticalBads:
    case GenClass::BinaryMixedGoods:
      for (int j : bad_positions) {
        Rational common(rng.range(opt.lo, -1));
        for (int i = 0; i < n; ++i) inst.value(i, j) = common;
      }
      break;
    case GenClass::RmgIdoBads:
      // Per-agent draws sorted worst-first across the bad positions, so all
      // agents share the ordinal ranking.
      for (int i = 0; i < n; ++i) {
        std::vector<long long> draws(bad_positions.size());
        for (auto& d : draws) d = rng.range(opt.lo, -1);
        std::sort(draws.begin(), draws.end());
        for (std::size_t t = 0; t < bad_positions.size(); ++t) {
          inst.value(i, bad_positions[t]) = Rational(draws[t]);
        }
      }
      break;
    default:
      for (int j : bad_positions) {
        for (int i = 0; i < n; ++i) inst.value(i, j) = Rational(rng.range(opt.lo, -1));
      }
      break;
  }
  return inst;
}

bool conforms(const Instance& inst, const GenOptions& opt) {
  InstanceClass cls = classify(inst);
  ItemPartition part = partition_items(inst);
  bool ok = false;
  switch (opt.klass) {
    case GenClass::RestrictedGoods:
      ok = cls.goods_only && cls.restricted_mixed_goods &&
           int(part.m_plus.size()) == inst.items();
      break;
    case GenClass::RmgIdenticalBads:
      ok = cls.restricted_mixed_goods && cls.identical_bads;
      break;
    case GenClass::BinaryMixedGoods:
      ok = cls.binary_mixed_goods && cls.identical_bads;
      break;
    case GenClass::Separable:
      ok = cls.separable;
      break;
    case GenClass::RmgIdoBads:
      ok = cls.restricted_mixed_goods && cls.ido_bads;
      break;
    case GenClass::RmgGeneralBads:
      ok = cls.restricted_mixed_goods;
      break;
  }
  if (!ok) return false;
  if (int(part.m_minus.size()) < opt.min_bads) return false;
  if (inst.items() > 0) {
    for (int i = 0; i < inst.agents(); ++i) {
      if (!inst.total(i).is_positive()) return false;
    }
  }
  return true;
}

}  // namespace

const char* gen_class_name(GenClass c) { return kClassNames[int(c)]; }

std::optional<GenClass> parse_gen_class(std::string_view name) {
  for (int k = 0; k <= int(GenClass::RmgGeneralBads); ++k) {
    if (name == kClassNames[k]) return GenClass(k);
  }
  return std::nullopt;
}

Instance generate_instance(const GenOptions& options) {
  if (options.agents < 1) fail(Errc::Parse, "generator needs at least one agent");
  if (options.items < 0) fail(Errc::Parse, "negative item count");
  if (options.min_bads > options.items) fail(Errc::Parse, "min_bads exceeds item count");
  if (options.hi < 1) fail(Errc::Parse, "value range must reach 1");
  if (options.klass != GenClass::RestrictedGoods && options.lo > -1) {
    fail(Errc::Parse, "value range must reach -1 for classes with bads");
  }

  SplitMix64 rng(options.seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Instance inst = draw(options, rng);
    if (conforms(inst, options)) return inst;
  }
  fail(Errc::Internal, "generator could not hit the requested class; relax the options");
}

}  // namespace manna
