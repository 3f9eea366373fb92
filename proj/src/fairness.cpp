#include "manna/fairness.hpp"

#include <algorithm>

namespace manna {

namespace {

const char* kNotionNames[] = {"EF",     "EFX",    "EFX0",    "PROP",          "PROPM",
                              "PROPM0", "PROPX",  "PROPMX",  "PROPMX0",       "PO_SUFFICIENT",
                              "PO_EXACT"};

bool goods_only(const Instance& inst) {
  for (int i = 0; i < inst.agents(); ++i) {
    for (int j = 0; j < inst.items(); ++j) {
      if (inst.value(i, j).is_negative()) return false;
    }
  }
  return true;
}

bool bads_only(const Instance& inst) {
  for (int i = 0; i < inst.agents(); ++i) {
    for (int j = 0; j < inst.items(); ++j) {
      if (!inst.value(i, j).is_negative()) return false;
    }
  }
  return true;
}

}  // namespace

const char* notion_name(FairnessNotion n) { return kNotionNames[int(n)]; }

std::optional<FairnessNotion> parse_notion(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return char(std::toupper(c)); });
  for (int k = 0; k <= int(FairnessNotion::PO_EXACT); ++k) {
    if (upper == kNotionNames[k]) return FairnessNotion(k);
  }
  if (upper == "PO") return FairnessNotion::PO_EXACT;
  return std::nullopt;
}

bool envies(const Instance& inst, const Allocation& alloc, int i, int h) {
  return bundle_value(inst, i, alloc.bundle(i)) < bundle_value(inst, i, alloc.bundle(h));
}

std::optional<Rational> maximin_good_value(const Instance& inst, const Allocation& alloc,
                                           int agent, bool include_zero) {
  std::optional<Rational> best;
  for (int rival = 0; rival < alloc.agents(); ++rival) {
    if (rival == agent) continue;
    std::optional<Rational> bundle_min;
    for (int item : alloc.bundle(rival)) {
      const Rational& v = inst.value(agent, item);
      bool qualifies = include_zero ? !v.is_negative() : v.is_positive();
      if (!qualifies) continue;
      if (!bundle_min || v < *bundle_min) bundle_min = v;
    }
    if (!bundle_min) continue;  // rival holds nothing this agent counts
    if (!best || *bundle_min > *best) best = bundle_min;
  }
  return best;
}

FairnessReport check_ef(const Instance& inst, const Allocation& alloc) {
  FairnessReport report{FairnessNotion::EF, true, {}};
  for (int i = 0; i < alloc.agents(); ++i) {
    Rational own = bundle_value(inst, i, alloc.bundle(i));
    for (int h = 0; h < alloc.agents(); ++h) {
      if (h == i) continue;
      if (own < bundle_value(inst, i, alloc.bundle(h))) {
        report.holds = false;
        report.witnesses.push_back({i, "envies agent " + std::to_string(h), {h}, {}});
      }
    }
  }
  return report;
}

FairnessReport check_efx(const Instance& inst, const Allocation& alloc, bool include_zero) {
  FairnessReport report{include_zero ? FairnessNotion::EFX0 : FairnessNotion::EFX, true, {}};
  std::vector<Rational> own(alloc.agents());
  for (int i = 0; i < alloc.agents(); ++i) own[i] = bundle_value(inst, i, alloc.bundle(i));

  for (int i = 0; i < alloc.agents(); ++i) {
    for (int h = 0; h < alloc.agents(); ++h) {
      if (h == i) continue;
      Rational rival = bundle_value(inst, i, alloc.bundle(h));
      if (own[i] >= rival) continue;  // no envy

      // (b): a positively (non-negatively) valued item exists in x_h and
      // removing any such item kills the envy.
      bool has_good = false;
      bool removal_ok = true;
      int bad_removal = -1;
      for (int g : alloc.bundle(h)) {
        const Rational& v = inst.value(i, g);
        bool qualifies = include_zero ? !v.is_negative() : v.is_positive();
        if (!qualifies) continue;
        has_good = true;
        if (own[i] < rival - v) {
          removal_ok = false;
          if (bad_removal < 0) bad_removal = g;
        }
      }
      if (has_good && removal_ok) continue;

      // (c): agent i holds a bad and dropping any own bad kills the envy.
      bool has_own_bad = false;
      bool drop_ok = true;
      int bad_drop = -1;
      for (int c : alloc.bundle(i)) {
        const Rational& v = inst.value(i, c);
        if (!v.is_negative()) continue;
        has_own_bad = true;
        if (own[i] - v < rival) {
          drop_ok = false;
          if (bad_drop < 0) bad_drop = c;
        }
      }
      if (has_own_bad && drop_ok) continue;

      report.holds = false;
      Witness w;
      w.agent = i;
      w.agents = {h};
      if (bad_removal >= 0) w.items.push_back(bad_removal);
      if (bad_drop >= 0) w.items.push_back(bad_drop);
      w.condition = std::string(include_zero ? "EFX0" : "EFX") + "-envies agent " +
                    std::to_string(h);
      report.witnesses.push_back(std::move(w));
    }
  }
  return report;
}

namespace {

void add_prop_witness(FairnessReport& report, int agent, const std::string& text,
                      std::vector<int> items = {}) {
  report.holds = false;
  report.witnesses.push_back({agent, text, {}, std::move(items)});
}

// Clause (i) of PropMX / the PropM body: v_i(x_i) + d_i >= Prop_i with an
// absent maximin good counting as zero.
bool maximin_clause(const Instance& inst, const Allocation& alloc, int agent, bool include_zero,
                    const Rational& own, const Rational& share) {
  Rational d = maximin_good_value(inst, alloc, agent, include_zero).value_or(Rational(0));
  return own + d >= share;
}

// Clause (ii): the agent holds at least one bad and removing any one of them
// reaches the proportional share.
bool own_bad_clause(const Instance& inst, const Allocation& alloc, int agent, const Rational& own,
                    const Rational& share, int* witness_item) {
  bool has_bad = false;
  for (int c : alloc.bundle(agent)) {
    const Rational& v = inst.value(agent, c);
    if (!v.is_negative()) continue;
    has_bad = true;
    if (own - v < share) {
      if (witness_item) *witness_item = c;
      return false;
    }
  }
  return has_bad;
}

}  // namespace

FairnessReport check_prop_family(const Instance& inst, const Allocation& alloc,
                                 FairnessNotion notion) {
  FairnessReport report{notion, true, {}};
  const bool goods = goods_only(inst);

  switch (notion) {
    case FairnessNotion::PROP:
      break;
    case FairnessNotion::PROPM:
    case FairnessNotion::PROPM0:
      if (!goods) {
        fail(Errc::NotionInapplicable,
             std::string(notion_name(notion)) + " is defined for goods-only instances");
      }
      break;
    case FairnessNotion::PROPX:
      if (!goods && !bads_only(inst)) {
        fail(Errc::NotionInapplicable, "PROPX is defined for goods-only or bads-only instances");
      }
      break;
    case FairnessNotion::PROPMX:
    case FairnessNotion::PROPMX0:
      break;
    default:
      fail(Errc::NotionInapplicable,
           std::string(notion_name(notion)) + " is not a proportionality notion");
  }

  for (int i = 0; i < alloc.agents(); ++i) {
    Rational own = bundle_value(inst, i, alloc.bundle(i));
    Rational share = proportional_share(inst, i);
    switch (notion) {
      case FairnessNotion::PROP: {
        if (own < share) {
          add_prop_witness(report, i, "utility " + own.str() + " below share " + share.str());
        }
        break;
      }
      case FairnessNotion::PROPM:
      case FairnessNotion::PROPM0: {
        bool zero = notion == FairnessNotion::PROPM0;
        if (!maximin_clause(inst, alloc, i, zero, own, share)) {
          Rational d = maximin_good_value(inst, alloc, i, zero).value_or(Rational(0));
          add_prop_witness(report, i,
                           own.str() + " + maximin " + d.str() + " below share " + share.str());
        }
        break;
      }
      case FairnessNotion::PROPX: {
        if (goods) {
          // Adding any one positively valued external good must reach the
          // share.
          for (int g = 0; g < inst.items(); ++g) {
            if (alloc.holder(g) == i) continue;
            const Rational& v = inst.value(i, g);
            if (!v.is_positive()) continue;
            if (own + v < share) {
              add_prop_witness(
                  report, i,
                  own.str() + " + item value " + v.str() + " below share " + share.str(), {g});
              break;
            }
          }
        } else {
          for (int c : alloc.bundle(i)) {
            if (own - inst.value(i, c) < share) {
              add_prop_witness(report, i, "still below share after dropping item", {c});
              break;
            }
          }
        }
        break;
      }
      case FairnessNotion::PROPMX:
      case FairnessNotion::PROPMX0: {
        bool zero = notion == FairnessNotion::PROPMX0;
        if (maximin_clause(inst, alloc, i, zero, own, share)) break;
        int witness_item = -1;
        if (own_bad_clause(inst, alloc, i, own, share, &witness_item)) break;
        std::vector<int> items;
        if (witness_item >= 0) items.push_back(witness_item);
        add_prop_witness(report, i, "neither maximin-good nor any-bad clause reaches the share",
                         std::move(items));
        break;
      }
      default:
        break;
    }
  }
  return report;
}

Rational social_welfare(const Instance& inst, const Allocation& alloc) {
  Rational sum;
  for (int i = 0; i < alloc.agents(); ++i) sum += bundle_value(inst, i, alloc.bundle(i));
  return sum;
}

int NashSignature::compare(const NashSignature& other) const {
  if (nonpositive != other.nonpositive) return nonpositive < other.nonpositive ? 1 : -1;
  boost::multiprecision::cpp_int lhs = product_num * other.product_den;
  boost::multiprecision::cpp_int rhs = other.product_num * product_den;
  if (lhs == rhs) return 0;
  return lhs > rhs ? 1 : -1;
}

std::string NashSignature::product_str() const {
  std::string s = product_num.str();
  if (product_den != 1) s += "/" + product_den.str();
  return s;
}

NashSignature nash_welfare_signature(const Instance& inst, const Allocation& alloc) {
  NashSignature sig;
  for (int i = 0; i < alloc.agents(); ++i) {
    Rational u = bundle_value(inst, i, alloc.bundle(i));
    if (!u.is_positive()) {
      ++sig.nonpositive;
      continue;
    }
    sig.product_num *= u.num();
    sig.product_den *= u.den();
  }
  boost::multiprecision::cpp_int g =
      boost::multiprecision::gcd(sig.product_num, sig.product_den);
  sig.product_num /= g;
  sig.product_den /= g;
  return sig;
}

bool check_po_sufficient(const Instance& inst, const Allocation& alloc) {
  return check_po_sufficient_report(inst, alloc).holds;
}

FairnessReport check_po_sufficient_report(const Instance& inst, const Allocation& alloc) {
  FairnessReport report{FairnessNotion::PO_SUFFICIENT, true, {}};
  for (int j = 0; j < alloc.items(); ++j) {
    int holder = alloc.holder(j);
    if (holder < 0) continue;
    Rational eta = inst.value(0, j);
    for (int i = 1; i < inst.agents(); ++i) eta = std::max(eta, inst.value(i, j));
    if (inst.value(holder, j) != eta) {
      report.holds = false;
      report.witnesses.push_back({holder,
                                  "holds item " + std::to_string(j) + " at value " +
                                      inst.value(holder, j).str() + " below max " + eta.str(),
                                  {},
                                  {j}});
    }
  }
  return report;
}

Rational max_social_welfare_bound(const Instance& inst) {
  Rational sum;
  for (int j = 0; j < inst.items(); ++j) {
    Rational eta = inst.value(0, j);
    for (int i = 1; i < inst.agents(); ++i) eta = std::max(eta, inst.value(i, j));
    sum += eta;
  }
  return sum;
}

}  // namespace manna
