#include "manna/oracle.hpp"

namespace manna {

std::optional<long long> allocation_count(const Instance& inst, const OracleBudget& budget) {
  long long count = 1;
  for (int j = 0; j < inst.items(); ++j) {
    if (count > budget.max_allocations / std::max(1, inst.agents())) return std::nullopt;
    count *= inst.agents();
  }
  if (count > budget.max_allocations) return std::nullopt;
  return count;
}

AllocationEnumerator::AllocationEnumerator(const Instance& inst, OracleBudget budget)
    : inst_(inst) {
  auto count = allocation_count(inst, budget);
  if (!count) {
    fail(Errc::BudgetExceeded, "enumeration of " + std::to_string(inst.agents()) + "^" +
                                   std::to_string(inst.items()) + " allocations exceeds budget " +
                                   std::to_string(budget.max_allocations));
  }
  total_ = *count;
  assign_.assign(inst.items(), 0);
  utils_.assign(inst.agents(), Rational(0));
}

bool AllocationEnumerator::next() {
  if (emitted_ == total_) return false;
  if (emitted_ == 0) {
    // First allocation: everything to agent 0.
    for (int j = 0; j < inst_.items(); ++j) utils_[0] += inst_.value(0, j);
    ++emitted_;
    return true;
  }
  // Odometer increment, last item fastest.
  int j = inst_.items() - 1;
  while (j >= 0) {
    utils_[assign_[j]] -= inst_.value(assign_[j], j);
    if (assign_[j] + 1 < inst_.agents()) {
      ++assign_[j];
      utils_[assign_[j]] += inst_.value(assign_[j], j);
      ++emitted_;
      return true;
    }
    assign_[j] = 0;
    utils_[0] += inst_.value(0, j);
    --j;
  }
  fail(Errc::Internal, "enumerator overran its count");
}

Allocation AllocationEnumerator::to_allocation() const {
  Allocation alloc(inst_.agents(), inst_.items());
  for (int j = 0; j < inst_.items(); ++j) alloc.assign(j, assign_[j]);
  return alloc;
}

bool is_pareto_optimal_exact(const Instance& inst, const Allocation& alloc,
                             OracleBudget budget) {
  std::vector<Rational> current = utilities(inst, alloc);
  AllocationEnumerator en(inst, budget);
  while (en.next()) {
    const auto& u = en.agent_utilities();
    bool weakly_better = true;
    bool strictly = false;
    for (int i = 0; i < inst.agents() && weakly_better; ++i) {
      if (u[i] < current[i]) weakly_better = false;
      if (u[i] > current[i]) strictly = true;
    }
    if (weakly_better && strictly) return false;
  }
  return true;
}

bool satisfies(const Instance& inst, const Allocation& alloc, const PredicateSet& preds,
               OracleBudget budget) {
  for (FairnessNotion notion : preds.notions) {
    if (!evaluate_notion(inst, alloc, notion, budget).holds) return false;
  }
  return true;
}

std::optional<Allocation> exists_allocation(const Instance& inst, const PredicateSet& preds,
                                            OracleBudget budget) {
  AllocationEnumerator en(inst, budget);
  while (en.next()) {
    Allocation candidate = en.to_allocation();
    if (satisfies(inst, candidate, preds, budget)) return candidate;
  }
  return std::nullopt;
}

MnwResult mnw_exact(const Instance& inst, OracleBudget budget) {
  AllocationEnumerator en(inst, budget);
  std::optional<NashSignature> best;
  Allocation witness;
  while (en.next()) {
    NashSignature sig;
    for (const Rational& u : en.agent_utilities()) {
      if (!u.is_positive()) {
        ++sig.nonpositive;
        continue;
      }
      sig.product_num *= u.num();
      sig.product_den *= u.den();
    }
    if (!best || sig.compare(*best) > 0) {
      boost::multiprecision::cpp_int g =
          boost::multiprecision::gcd(sig.product_num, sig.product_den);
      sig.product_num /= g;
      sig.product_den /= g;
      best = sig;
      witness = en.to_allocation();
    }
  }
  return {*best, std::move(witness)};
}

MaxSwResult max_sw_exact(const Instance& inst, OracleBudget budget) {
  AllocationEnumerator en(inst, budget);
  std::optional<Rational> best;
  Allocation witness;
  while (en.next()) {
    Rational sw;
    for (const Rational& u : en.agent_utilities()) sw += u;
    if (!best || sw > *best) {
      best = sw;
      witness = en.to_allocation();
    }
  }
  return {*best, std::move(witness)};
}

FairnessReport evaluate_notion(const Instance& inst, const Allocation& alloc,
                               FairnessNotion notion, OracleBudget budget) {
  switch (notion) {
    case FairnessNotion::EF:
      return check_ef(inst, alloc);
    case FairnessNotion::EFX:
      return check_efx(inst, alloc, false);
    case FairnessNotion::EFX0:
      return check_efx(inst, alloc, true);
    case FairnessNotion::PROP:
    case FairnessNotion::PROPM:
    case FairnessNotion::PROPM0:
    case FairnessNotion::PROPX:
    case FairnessNotion::PROPMX:
    case FairnessNotion::PROPMX0:
      return check_prop_family(inst, alloc, notion);
    case FairnessNotion::PO_SUFFICIENT:
      return check_po_sufficient_report(inst, alloc);
    case FairnessNotion::PO_EXACT: {
      FairnessReport report{FairnessNotion::PO_EXACT, true, {}};
      if (!is_pareto_optimal_exact(inst, alloc, budget)) {
        report.holds = false;
        report.witnesses.push_back({-1, "a Pareto-dominating allocation exists", {}, {}});
      }
      return report;
    }
  }
  fail(Errc::Internal, "unknown notion");
}

}  // namespace manna
