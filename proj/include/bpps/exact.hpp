#ifndef BPPS_EXACT_HPP
#define BPPS_EXACT_HPP

#include <optional>
#include <vector>

#include "bpps/instance.hpp"
#include "bpps/simplex.hpp"
#include "bpps/solution.hpp"

namespace bpps {

/// Master-problem column: a pattern plus its LP column index.
struct Column {
    Pattern pattern;
    int lp_index = -1; // structural LP index, -1 before installation
};

struct DualSolution {
    std::vector<double> alpha; // per item, clamped >= 0
    std::vector<double> beta;  // per scenario, clamped <= 0
};

/// Ryan-Foster branching decisions: together as a union-find over items,
/// apart as forbidden original-item pairs.
class BranchState {
public:
    explicit BranchState(int n);

    int find(int item) const;
    void merge(int a, int b);
    void forbid(int a, int b);

    /// A pair both together and apart makes the node infeasible.
    bool consistent() const;

    const std::vector<std::pair<int, int>>& apart_pairs() const { return apart_; }

    /// True iff the column splits a merged class or joins a forbidden pair.
    bool column_violates(const Instance& inst, const Pattern& p) const;

    /// Members of each merged class keyed by representative, singletons included.
    std::vector<std::vector<int>> classes() const;

private:
    mutable std::vector<int> parent_;
    std::vector<std::pair<int, int>> apart_;
};

/// Pseudo-item for pricing: a merged class with per-scenario sizes.
struct PricedItem {
    std::vector<int> members;                  // original items
    double alpha = 0.0;
    std::vector<std::pair<int, int>> loads;    // (scenario, size), size > 0
};

struct PriceResult {
    Pattern pattern;      // expanded to original items
    double value = 0.0;   // optimum of the dual-weighted pattern objective
    bool proven = true;   // false when a node or time budget was exhausted
};

/// Exact maximizer of the dual-weighted pattern value over feasible patterns
/// on the pseudo-items of `state`, honoring apart constraints. Negative
/// budgets mean unlimited; a non-negative time_limit_s aborts the search
/// (proven = false) once exceeded.
PriceResult price(const Instance& inst, const DualSolution& duals, const BranchState& state,
                  long long node_budget = -1, double time_limit_s = -1.0);

struct SearchStats {
    long long nodes = 0;
    long long columns = 0;
    int best_lb = 0;
    int best_ub = 0;
    double time_s = 0.0;
    std::string status; // "optimal" | "gap"
    double gap() const { return best_ub > 0 ? double(best_ub - best_lb) / best_ub : 0.0; }
};

struct BpResult {
    Solution solution;
    SearchStats stats;
};

struct BpOptions {
    double time_limit = 3600.0;
    bool warm_columns = true;   // add warm-start bins to the column pool
    long long ip_node_budget = 100000;
    double ip_time_budget = 2.0;
};

/// Branch-and-price over the pattern master model with Ryan-Foster branching.
BpResult branch_and_price(const Instance& inst, const Solution* warm_start = nullptr,
                          const BpOptions& opts = {});

/// Exhaustive set-partition search minimizing the worst-case scenario bin
/// count; ground-truth oracle for n <= 12.
Solution solve_enumeration(const Instance& inst, int max_items = 12);

} // namespace bpps

#endif
