#ifndef BPPS_RNG_HPP
#define BPPS_RNG_HPP

#include <cstdint>

namespace bpps {

// Deterministic 64-bit generator (splitmix64). We do not use the standard
// library distributions anywhere: their output differs across standard
// library implementations, and the benchmark classes must be reproducible
// bit-for-bit on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [lo, hi] via rejection sampling.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        if (range == 0) return static_cast<std::int64_t>(next_u64());
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return lo + static_cast<std::int64_t>(v % range);
    }

    // Bernoulli(num/den) draw with integer arithmetic.
    bool bernoulli(std::uint64_t num, std::uint64_t den) {
        return static_cast<std::uint64_t>(uniform_int(0, static_cast<std::int64_t>(den) - 1)) < num;
    }

    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

// Stable seed mixing for derived streams (per class / per replicate).
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b);

} // namespace bpps

#endif
