#ifndef BPPS_INSTANCE_HPP
#define BPPS_INSTANCE_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace bpps {

/// Bin packing instance with scenarios. Items and scenarios are 0-based
/// internally; the text format uses 1-based scenario indices.
///
/// Immutable after construction; safe to share between threads.
class Instance {
public:
    /// Throws std::invalid_argument if any invariant is violated:
    /// sizes in [1, W], every scenario set nonempty with indices in [0, d).
    Instance(int d, int capacity, std::vector<int> sizes,
             std::vector<std::vector<int>> scenarios);

    int num_items() const { return static_cast<int>(sizes_.size()); }
    int num_scenarios() const { return d_; }
    int capacity() const { return capacity_; }
    int size(int item) const { return sizes_[item]; }
    const std::vector<int>& sizes() const { return sizes_; }

    /// Sorted scenario indices of item i.
    const std::vector<int>& scenarios_of(int item) const { return scenarios_[item]; }

    /// Items belonging to scenario k (the set S_k), sorted.
    const std::vector<int>& scenario_items(int k) const { return by_scenario_[k]; }

    bool in_scenario(int item, int k) const {
        return (masks_[item][static_cast<std::size_t>(k) >> 6] >> (k & 63)) & 1u;
    }

    /// One 64-bit word block per 64 scenarios, for fast load updates.
    const std::vector<std::uint64_t>& scenario_mask(int item) const { return masks_[item]; }
    int mask_words() const { return mask_words_; }

private:
    int d_;
    int capacity_;
    std::vector<int> sizes_;
    std::vector<std::vector<int>> scenarios_;
    std::vector<std::vector<int>> by_scenario_;
    std::vector<std::vector<std::uint64_t>> masks_;
    int mask_words_;
};

} // namespace bpps

#endif
