#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "manna/fairness.hpp"

namespace manna {

struct OracleBudget {
  long long max_allocations = 10'000'000;
};

// Streams all n^m complete allocations of an instance exactly once, in
// lexicographic item->agent order (the last item's agent varies fastest).
// Utilities are maintained incrementally. Raises BUDGET_EXCEEDED up front
// when n^m does not fit the budget.
class AllocationEnumerator {
 public:
  explicit AllocationEnumerator(const Instance& inst, OracleBudget budget = {});

  long long total() const { return total_; }

  // Advances to the next allocation; the first call lands on the first one.
  bool next();

  const std::vector<int>& assignment() const { return assign_; }
  const std::vector<Rational>& agent_utilities() const { return utils_; }
  Allocation to_allocation() const;

 private:
  Instance inst_;  // copied so the enumerator outlives its argument
  long long total_ = 0;
  long long emitted_ = 0;
  std::vector<int> assign_;
  std::vector<Rational> utils_;
};

// Number of complete allocations, or nullopt when it exceeds the budget.
std::optional<long long> allocation_count(const Instance& inst, const OracleBudget& budget);

// True iff no enumerated allocation weakly improves everyone and strictly
// improves someone.
bool is_pareto_optimal_exact(const Instance& inst, const Allocation& alloc,
                             OracleBudget budget = {});

// Conjunction of fairness requirements; PO_EXACT delegates to the dominance
// scan, PO_SUFFICIENT to the argmax check.
struct PredicateSet {
  std::vector<FairnessNotion> notions;
};

bool satisfies(const Instance& inst, const Allocation& alloc, const PredicateSet& preds,
               OracleBudget budget = {});

// First enumerated allocation meeting every predicate, else absent.
std::optional<Allocation> exists_allocation(const Instance& inst, const PredicateSet& preds,
                                            OracleBudget budget = {});

struct MnwResult {
  NashSignature signature;
  Allocation witness;  // lexicographically first maximizer
};

MnwResult mnw_exact(const Instance& inst, OracleBudget budget = {});

struct MaxSwResult {
  Rational value;
  Allocation witness;
};

MaxSwResult max_sw_exact(const Instance& inst, OracleBudget budget = {});

// Report-producing wrapper over the full notion vocabulary, including the
// oracle-backed PO_EXACT.
FairnessReport evaluate_notion(const Instance& inst, const Allocation& alloc,
                               FairnessNotion notion, OracleBudget budget = {});

}  // namespace manna
