#include "bpps/instance.hpp"

#include <algorithm>
#include <cstdint>

namespace bpps {

Instance::Instance(int d, int capacity, std::vector<int> sizes,
                   std::vector<std::vector<int>> scenarios)
    : d_(d), capacity_(capacity), sizes_(std::move(sizes)), scenarios_(std::move(scenarios)) {
    if (d_ < 1) throw std::invalid_argument("scenario count must be positive");
    if (capacity_ < 1) throw std::invalid_argument("capacity must be positive");
    if (scenarios_.size() != sizes_.size())
        throw std::invalid_argument("sizes and scenario sets must have equal length");
    const int n = num_items();
    mask_words_ = (d_ + 63) / 64;
    by_scenario_.assign(d_, {});
    masks_.assign(n, std::vector<std::uint64_t>(mask_words_, 0));
    for (int i = 0; i < n; ++i) {
        if (sizes_[i] < 1 || sizes_[i] > capacity_)
            throw std::invalid_argument("item size out of [1, W] at item " + std::to_string(i + 1));
        auto& ks = scenarios_[i];
        if (ks.empty())
            throw std::invalid_argument("empty scenario set at item " + std::to_string(i + 1));
        std::sort(ks.begin(), ks.end());
        ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
        for (int k : ks) {
            if (k < 0 || k >= d_)
                throw std::invalid_argument("scenario index out of range at item " +
                                            std::to_string(i + 1));
            by_scenario_[k].push_back(i);
            masks_[i][static_cast<std::size_t>(k) >> 6] |= 1ULL << (k & 63);
        }
    }
}

} // namespace bpps
