#include "bpps/generate.hpp"

#include <cmath>
#include <stdexcept>

#include "bpps/rng.hpp"

namespace bpps {

Instance generate_instance(const GenParams& p) {
    if (p.n < 1 || p.d < 1) throw std::invalid_argument("n and d must be positive");
    if (p.size_lo < 1 || p.size_lo > p.size_hi || p.size_hi > p.capacity)
        throw std::invalid_argument("need 1 <= size_lo <= size_hi <= W");
    if (p.membership_p <= 0.0 || p.membership_p > 1.0)
        throw std::invalid_argument("membership probability must be in (0, 1]");

    // Membership threshold on the top 32 bits of the generator output; the
    // draw is identical on every platform for a fixed p.
    const auto threshold =
        static_cast<std::uint64_t>(std::llround(p.membership_p * 4294967296.0));

    Rng rng(p.seed);
    std::vector<int> sizes(p.n);
    std::vector<std::vector<int>> scenarios(p.n);
    for (int i = 0; i < p.n; ++i)
        sizes[i] = static_cast<int>(rng.uniform_int(p.size_lo, p.size_hi));
    for (int i = 0; i < p.n; ++i) {
        auto& ks = scenarios[i];
        do {
            ks.clear();
            for (int k = 0; k < p.d; ++k)
                if ((rng.next_u64() >> 32) < threshold) ks.push_back(k);
        } while (ks.empty());
    }
    return Instance(p.d, p.capacity, std::move(sizes), std::move(scenarios));
}

Instance generate_instance(int n, int d, std::uint64_t seed) {
    GenParams p;
    p.n = n;
    p.d = d;
    p.seed = seed;
    return generate_instance(p);
}

} // namespace bpps
