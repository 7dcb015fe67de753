#ifndef BPPS_HEURISTIC_HPP
#define BPPS_HEURISTIC_HPP

#include <cstdint>
#include <vector>

#include "bpps/fitness.hpp"
#include "bpps/instance.hpp"
#include "bpps/rng.hpp"
#include "bpps/solution.hpp"

namespace bpps {

/// First-fit decreasing: items in non-increasing size (ties by index), each
/// into the lowest-index bin where every scenario load stays within W.
Solution ffd_construct(const Instance& inst);

/// One neighborhood move. Bin indices >= current bin count denote fresh bins.
struct Move {
    enum class Kind { Swap, Relocate, SplitPair, DissolveBin };
    Kind kind;
    int item_i = -1;
    int item_j = -1;
    int bin_a = -1; // source bin (Swap: bin of item_i; DissolveBin: the bin)
    int bin_b = -1; // target of item_i (Swap: bin of item_j)
    int bin_c = -1; // SplitPair: target of item_j
};

/// All feasibility-preserving moves of structure N_kappa in deterministic order.
std::vector<Move> enumerate_neighbors(const Instance& inst, const Solution& sol, int kappa);

/// Applies a move produced by enumerate_neighbors on the same solution;
/// empty bins are dropped.
Solution apply_move(const Instance& inst, const Solution& sol, const Move& mv);

/// One uniformly random feasible move of N_kappa; input unchanged when the
/// neighborhood is empty.
Solution shake(const Instance& inst, const Solution& sol, int kappa, Rng& rng);

/// Variable neighborhood descent, best-improvement with ties broken by
/// enumeration order. Output fitness <= input fitness. A non-negative
/// time_limit_s bounds the descent: when it runs out, the best solution
/// reached so far is returned (still never worse than the input).
Solution local_search(const Instance& inst, Solution sol, int n_max = 4,
                      double time_limit_s = -1.0);

struct VnsConfig {
    int n_max = 4;
    double t_max = 1800.0;
    long long c_max = 500;
    std::uint64_t seed = 0;
};

struct VnsStats {
    long long iterations = 0;
    long long improvements = 0;
    double time_s = 0.0;
};

struct VnsResult {
    Solution solution;
    VnsStats stats;
};

VnsResult vns(const Instance& inst, const Solution& initial, const VnsConfig& cfg);

} // namespace bpps

#endif
