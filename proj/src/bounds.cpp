#include "bpps/bounds.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace bpps {

int lb_continuous(const Instance& inst) {
    const std::int64_t w = inst.capacity();
    std::int64_t best = 0;
    for (int k = 0; k < inst.num_scenarios(); ++k) {
        std::int64_t load = 0;
        for (int i : inst.scenario_items(k)) load += inst.size(i);
        best = std::max(best, (load + w - 1) / w);
    }
    return static_cast<int>(best);
}

int dff_fekete(int s, int lambda, int capacity) {
    if (s < 0 || s > capacity) throw std::invalid_argument("size out of [0, W]");
    if (lambda < 1 || 2 * lambda > capacity) throw std::invalid_argument("lambda out of [1, W/2]");
    if (s > capacity - lambda) return capacity;
    if (s <= lambda) return 0;
    return s;
}

int lb_dff(const Instance& inst, int lambda) {
    const std::int64_t w = inst.capacity();
    std::int64_t best = 0;
    for (int k = 0; k < inst.num_scenarios(); ++k) {
        std::int64_t sum = 0;
        for (int i : inst.scenario_items(k)) sum += dff_fekete(inst.size(i), lambda, inst.capacity());
        best = std::max(best, (sum + w - 1) / w);
    }
    return static_cast<int>(best);
}

RootBound lb_root(const Instance& inst) {
    RootBound r;
    r.continuous = lb_continuous(inst);
    for (int lambda = 1; 2 * lambda <= inst.capacity(); ++lambda) {
        int b = lb_dff(inst, lambda);
        if (b > r.dff) {
            r.dff = b;
            r.best_lambda = lambda;
        }
    }
    r.value = std::max(r.continuous, r.dff);
    return r;
}

} // namespace bpps
