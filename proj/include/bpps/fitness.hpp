#ifndef BPPS_FITNESS_HPP
#define BPPS_FITNESS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "bpps/instance.hpp"
#include "bpps/solution.hpp"

namespace bpps {

using Rational = boost::multiprecision::cpp_rational;

/// Exact fitness value: val_bpps minus the squared-occupation penalty
///   sum_k sum_{B in B_k} (ocp(k,B) / (|B_k| W))^2.
/// Comparisons are exact; no epsilon is involved in accept/reject decisions.
///
/// For instances with at most `kFastItems` items the penalty fits a fixed
/// integer scale (W * lcm(1..12))^2 and comparisons stay in 128-bit
/// integers; larger instances fall back to arbitrary-precision rationals.
class Fitness {
public:
    static constexpr int kFastItems = 12;

    bool operator<(const Fitness& other) const;
    bool operator==(const Fitness& other) const;
    bool operator<=(const Fitness& other) const { return *this < other || *this == other; }

    double to_double() const;
    int bpps_value() const { return val_; }

private:
    friend Fitness fitness(const Instance&, const Solution&);
    int val_ = 0;
    bool fast_ = true;
    __int128 pen_scaled_ = 0;  // penalty * scale_, fast path
    __int128 scale_ = 1;
    Rational pen_;             // slow path
};

/// Throws std::invalid_argument on infeasible solutions.
Fitness fitness(const Instance& inst, const Solution& sol);

} // namespace bpps

#endif
