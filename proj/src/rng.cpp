#include "bpps/rng.hpp"

namespace bpps {

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
    Rng r(base ^ (a * 0x9e3779b97f4a7c15ULL) ^ (b * 0xc2b2ae3d27d4eb4fULL));
    r.next_u64();
    return r.next_u64();
}

} // namespace bpps
