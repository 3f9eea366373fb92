#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "manna/core.hpp"

namespace manna {

enum class FairnessNotion {
  EF,
  EFX,
  EFX0,
  PROP,
  PROPM,
  PROPM0,
  PROPX,
  PROPMX,
  PROPMX0,
  PO_SUFFICIENT,
  PO_EXACT,  // delegated to the enumeration oracle
};

const char* notion_name(FairnessNotion n);
std::optional<FairnessNotion> parse_notion(std::string_view name);

struct Witness {
  int agent = -1;
  std::string condition;
  std::vector<int> agents;  // offending rivals, if any
  std::vector<int> items;   // offending items, if any
};

struct FairnessReport {
  FairnessNotion notion;
  bool holds = true;
  std::vector<Witness> witnesses;
};

// v_i(x_i) < v_i(x_h), exact.
bool envies(const Instance& inst, const Allocation& alloc, int i, int h);

// d_i(x): over rivals, the max of each rival bundle's minimum positively
// (or non-negatively) valued item for agent i. Rivals holding no qualifying
// item contribute nothing; absent when no rival qualifies at all.
std::optional<Rational> maximin_good_value(const Instance& inst, const Allocation& alloc,
                                           int agent, bool include_zero);

FairnessReport check_ef(const Instance& inst, const Allocation& alloc);
FairnessReport check_efx(const Instance& inst, const Allocation& alloc, bool include_zero);

// PROP, PROPM, PROPM0, PROPX, PROPMX, PROPMX0. PropM variants require a
// goods-only instance; PropX requires goods-only or bads-only. Raises
// NOTION_INAPPLICABLE otherwise.
FairnessReport check_prop_family(const Instance& inst, const Allocation& alloc,
                                 FairnessNotion notion);

Rational social_welfare(const Instance& inst, const Allocation& alloc);

// Nash welfare as an argmax-preserving signature: fewer non-positive
// utilities first, then the larger exact product of the positive ones.
struct NashSignature {
  long long nonpositive = 0;
  boost::multiprecision::cpp_int product_num = 1;
  boost::multiprecision::cpp_int product_den = 1;

  // <0 when *this is worse than other, 0 equal, >0 better.
  int compare(const NashSignature& other) const;
  std::string product_str() const;
};

NashSignature nash_welfare_signature(const Instance& inst, const Allocation& alloc);

// Argmax sufficiency: every allocated item sits with an agent valuing it at
// the item's maximum. Implies PO and maximum social welfare. Quantifies over
// allocated items, so it extends naturally to partial allocations.
bool check_po_sufficient(const Instance& inst, const Allocation& alloc);
FairnessReport check_po_sufficient_report(const Instance& inst, const Allocation& alloc);

// Max social welfare equals the sum of per-item maxima.
Rational max_social_welfare_bound(const Instance& inst);

}  // namespace manna
