#ifndef BPPS_GENERATE_HPP
#define BPPS_GENERATE_HPP

#include <cstdint>

#include "bpps/instance.hpp"

namespace bpps {

struct GenParams {
    int n = 10;
    int d = 5;
    std::uint64_t seed = 0;
    int size_lo = 1;
    int size_hi = 99;
    int capacity = 100;
    double membership_p = 0.5;
};

/// Random instance: sizes uniform on [size_lo, size_hi], each (item, scenario)
/// membership an independent Bernoulli(p) draw; items that draw an empty
/// scenario set are redrawn until nonempty. Deterministic given all parameters.
Instance generate_instance(const GenParams& params);

Instance generate_instance(int n, int d, std::uint64_t seed);

} // namespace bpps

#endif
