#ifndef BPPS_APPROX_HPP
#define BPPS_APPROX_HPP

#include <vector>

#include "bpps/instance.hpp"
#include "bpps/solution.hpp"

namespace bpps {

/// Vector bin packing instance with a uniform capacity per dimension.
struct VbppInstance {
    int d = 0;
    int capacity = 0;
    std::vector<std::vector<int>> consumption; // n x d, s_{ik}

    int num_items() const { return static_cast<int>(consumption.size()); }
};

/// s_{ik} = s_i if k in K_i else 0; bin sets feasible for one problem are
/// feasible for the other.
VbppInstance to_vbpp(const Instance& inst);

bool vbpp_feasible(const VbppInstance& vb, const Solution& sol);

/// First-fit respecting all dimensional capacities. Default order: items by
/// non-increasing maximum consumption, ties by index.
Solution first_fit_vbpp(const VbppInstance& vb);
Solution first_fit_vbpp(const VbppInstance& vb, const std::vector<int>& order);

/// True iff no two bins can be merged without violating a scenario capacity.
bool is_minimal(const Instance& inst, const Solution& sol);

/// Repeatedly merges mergeable bin pairs in lexicographic index order until
/// none applies. Never increases either objective.
Solution minimalize(const Instance& inst, const Solution& sol);

/// VBPP mapping -> first fit -> minimalize.
Solution approx_solve(const Instance& inst);

struct Theorem3Family {
    Instance instance;
    Solution reference; // singleton bins
};

/// ceil(sqrt(d)) items of size W, one scenario per edge of the complete graph
/// on the items (a single full-item scenario when d == 1).
Theorem3Family build_theorem3_instance(int d, int capacity = 100);

} // namespace bpps

#endif
