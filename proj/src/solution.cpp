#include "bpps/solution.hpp"

#include <algorithm>

namespace bpps {

std::string Violation::describe() const {
    switch (kind) {
        case Kind::NotPartition:
            return "item " + std::to_string(item + 1) +
                   (bin >= 0 ? " appears more than once (bin " + std::to_string(bin + 1) + ")"
                             : " is unpacked");
        case Kind::Overload:
            return "bin " + std::to_string(bin + 1) + " overloads scenario " +
                   std::to_string(scenario + 1) + " by " + std::to_string(overload);
        case Kind::BadIndex:
            return "bin " + std::to_string(bin + 1) + " references invalid item " +
                   std::to_string(item + 1);
    }
    return "";
}

FeasibilityReport check_feasible(const Instance& inst, const Solution& sol) {
    FeasibilityReport rep;
    const int n = inst.num_items();
    std::vector<int> seen(n, 0);
    for (int b = 0; b < sol.num_bins(); ++b) {
        for (int i : sol.bins[b]) {
            if (i < 0 || i >= n) {
                rep.violations.push_back({Violation::Kind::BadIndex, b, -1, i, 0});
                continue;
            }
            if (++seen[i] == 2)
                rep.violations.push_back({Violation::Kind::NotPartition, b, -1, i, 0});
        }
        std::vector<int> load(inst.num_scenarios(), 0);
        for (int i : sol.bins[b]) {
            if (i < 0 || i >= n) continue;
            for (int k : inst.scenarios_of(i)) load[k] += inst.size(i);
        }
        for (int k = 0; k < inst.num_scenarios(); ++k)
            if (load[k] > inst.capacity())
                rep.violations.push_back(
                    {Violation::Kind::Overload, b, k, -1, load[k] - inst.capacity()});
    }
    for (int i = 0; i < n; ++i)
        if (seen[i] == 0)
            rep.violations.push_back({Violation::Kind::NotPartition, -1, -1, i, 0});
    return rep;
}

int val_bpps_unchecked(const Instance& inst, const Solution& sol) {
    std::vector<int> used(inst.num_scenarios(), 0);
    for (const auto& bin : sol.bins) {
        std::vector<std::uint64_t> touched(inst.mask_words(), 0);
        for (int i : bin) {
            const auto& m = inst.scenario_mask(i);
            for (int w = 0; w < inst.mask_words(); ++w) touched[w] |= m[w];
        }
        for (int k = 0; k < inst.num_scenarios(); ++k)
            if ((touched[static_cast<std::size_t>(k) >> 6] >> (k & 63)) & 1u) ++used[k];
    }
    int best = 0;
    for (int u : used) best = std::max(best, u);
    return best;
}

int val_bpps(const Instance& inst, const Solution& sol) {
    auto rep = check_feasible(inst, sol);
    if (!rep.ok())
        throw std::invalid_argument("val_bpps: infeasible solution: " +
                                    rep.violations.front().describe());
    return val_bpps_unchecked(inst, sol);
}

int val_vbpp(const Solution& sol) { return sol.num_bins(); }

int bin_load(const Instance& inst, const std::vector<int>& bin, int scenario) {
    int load = 0;
    for (int i : bin)
        if (inst.in_scenario(i, scenario)) load += inst.size(i);
    return load;
}

bool bin_feasible(const Instance& inst, const std::vector<int>& items) {
    std::vector<int> load(inst.num_scenarios(), 0);
    for (int i : items)
        for (int k : inst.scenarios_of(i)) {
            load[k] += inst.size(i);
            if (load[k] > inst.capacity()) return false;
        }
    return true;
}

Pattern Pattern::from_items(const Instance& inst, std::vector<int> items) {
    std::sort(items.begin(), items.end());
    if (!bin_feasible(inst, items))
        throw std::invalid_argument("pattern violates a scenario capacity");
    std::vector<std::uint64_t> touched(inst.mask_words(), 0);
    for (int i : items) {
        const auto& m = inst.scenario_mask(i);
        for (int w = 0; w < inst.mask_words(); ++w) touched[w] |= m[w];
    }
    Pattern p;
    p.items = std::move(items);
    for (int k = 0; k < inst.num_scenarios(); ++k)
        if ((touched[static_cast<std::size_t>(k) >> 6] >> (k & 63)) & 1u)
            p.touched_scenarios.push_back(k);
    return p;
}

} // namespace bpps
