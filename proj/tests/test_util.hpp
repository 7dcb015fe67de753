#ifndef BPPS_TEST_UTIL_HPP
#define BPPS_TEST_UTIL_HPP

#include <vector>

#include "bpps/instance.hpp"
#include "bpps/rng.hpp"

namespace bpps::testutil {

/// Small random instance with n in [lo_n, hi_n], d in [1, max_d], sizes in
/// [1, W]; every item gets at least one scenario.
inline Instance random_small(Rng& rng, int lo_n, int hi_n, int max_d, int capacity = 100) {
    const int n = static_cast<int>(rng.uniform_int(lo_n, hi_n));
    const int d = static_cast<int>(rng.uniform_int(1, max_d));
    std::vector<int> sizes(n);
    std::vector<std::vector<int>> scen(n);
    for (int i = 0; i < n; ++i) {
        sizes[i] = static_cast<int>(rng.uniform_int(1, capacity));
        for (int k = 0; k < d; ++k)
            if (rng.bernoulli(1, 2)) scen[i].push_back(k);
        if (scen[i].empty()) scen[i].push_back(static_cast<int>(rng.uniform_int(0, d - 1)));
    }
    return Instance(d, capacity, std::move(sizes), std::move(scen));
}

} // namespace bpps::testutil

#endif
