#ifndef BPPS_BOUNDS_HPP
#define BPPS_BOUNDS_HPP

#include "bpps/instance.hpp"

namespace bpps {

/// Continuous bound: max over scenarios of ceil(load(S_k) / W).
int lb_continuous(const Instance& inst);

/// Fekete-Schepers dual feasible function on absolute sizes:
/// W if s > W - lambda, 0 if s <= lambda, s otherwise.
/// Requires 0 <= s <= W and 1 <= lambda <= W/2.
int dff_fekete(int s, int lambda, int capacity);

/// DFF bound for one lambda: max over scenarios of ceil(sum f(s_i) / W).
int lb_dff(const Instance& inst, int lambda);

struct RootBound {
    int value = 0;
    int continuous = 0;
    int dff = 0;        // best DFF bound over the lambda sweep
    int best_lambda = 1;
};

/// Max of the continuous bound and the DFF bound over lambda in {1..W/2}.
RootBound lb_root(const Instance& inst);

} // namespace bpps

#endif
