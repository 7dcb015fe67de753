#ifndef BPPS_SOLUTION_HPP
#define BPPS_SOLUTION_HPP

#include <string>
#include <vector>

#include "bpps/instance.hpp"

namespace bpps {

/// A partition of the items into bins. Item indices are 0-based.
struct Solution {
    std::vector<std::vector<int>> bins;

    int num_bins() const { return static_cast<int>(bins.size()); }
};

struct Violation {
    enum class Kind { NotPartition, Overload, BadIndex };
    Kind kind;
    int bin = -1;       // 0-based bin, -1 when not applicable
    int scenario = -1;  // 0-based scenario for Overload
    int item = -1;      // item involved in partition/index violations
    int overload = 0;   // load - W for Overload
    std::string describe() const;
};

struct FeasibilityReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks the partition property and every per-scenario capacity constraint.
FeasibilityReport check_feasible(const Instance& inst, const Solution& sol);

/// Worst-case scenario bin count; throws std::invalid_argument on infeasible input.
int val_bpps(const Instance& inst, const Solution& sol);

/// Same as val_bpps but assumes the solution was already validated.
int val_bpps_unchecked(const Instance& inst, const Solution& sol);

/// Number of bins.
int val_vbpp(const Solution& sol);

/// Per-scenario load of one bin.
int bin_load(const Instance& inst, const std::vector<int>& bin, int scenario);

/// True iff the item set fits in one bin under every scenario.
bool bin_feasible(const Instance& inst, const std::vector<int>& items);

/// Cutting pattern: one feasible bin together with its touched scenarios.
struct Pattern {
    std::vector<int> items;             // sorted, the a_ip coefficients
    std::vector<int> touched_scenarios; // sorted, derived b_kp coefficients

    /// Builds the pattern for an item set, deriving touched scenarios.
    /// Throws std::invalid_argument if some scenario load exceeds W.
    static Pattern from_items(const Instance& inst, std::vector<int> items);
};

} // namespace bpps

#endif
