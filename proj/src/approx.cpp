#include "bpps/approx.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace bpps {

VbppInstance to_vbpp(const Instance& inst) {
    VbppInstance vb;
    vb.d = inst.num_scenarios();
    vb.capacity = inst.capacity();
    vb.consumption.assign(inst.num_items(), std::vector<int>(vb.d, 0));
    for (int i = 0; i < inst.num_items(); ++i)
        for (int k : inst.scenarios_of(i)) vb.consumption[i][k] = inst.size(i);
    return vb;
}

bool vbpp_feasible(const VbppInstance& vb, const Solution& sol) {
    std::vector<char> seen(vb.num_items(), 0);
    for (const auto& bin : sol.bins) {
        std::vector<long long> load(vb.d, 0);
        for (int i : bin) {
            if (i < 0 || i >= vb.num_items() || seen[i]) return false;
            seen[i] = 1;
            for (int k = 0; k < vb.d; ++k) load[k] += vb.consumption[i][k];
        }
        for (int k = 0; k < vb.d; ++k)
            if (load[k] > vb.capacity) return false;
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

Solution first_fit_vbpp(const VbppInstance& vb) {
    std::vector<int> order(vb.num_items());
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> key(vb.num_items(), 0);
    for (int i = 0; i < vb.num_items(); ++i)
        key[i] = *std::max_element(vb.consumption[i].begin(), vb.consumption[i].end());
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return key[a] > key[b]; });
    return first_fit_vbpp(vb, order);
}

Solution first_fit_vbpp(const VbppInstance& vb, const std::vector<int>& order) {
    Solution sol;
    std::vector<std::vector<long long>> load;
    for (int i : order) {
        bool placed = false;
        for (int b = 0; b < sol.num_bins() && !placed; ++b) {
            bool fits = true;
            for (int k = 0; k < vb.d && fits; ++k)
                if (load[b][k] + vb.consumption[i][k] > vb.capacity) fits = false;
            if (fits) {
                sol.bins[b].push_back(i);
                for (int k = 0; k < vb.d; ++k) load[b][k] += vb.consumption[i][k];
                placed = true;
            }
        }
        if (!placed) {
            sol.bins.push_back({i});
            load.emplace_back(vb.consumption[i].begin(), vb.consumption[i].end());
        }
    }
    return sol;
}

namespace {

bool mergeable(const Instance& inst, const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> merged = a;
    merged.insert(merged.end(), b.begin(), b.end());
    return bin_feasible(inst, merged);
}

} // namespace

bool is_minimal(const Instance& inst, const Solution& sol) {
    for (int a = 0; a < sol.num_bins(); ++a)
        for (int b = a + 1; b < sol.num_bins(); ++b)
            if (mergeable(inst, sol.bins[a], sol.bins[b])) return false;
    return true;
}

Solution minimalize(const Instance& inst, const Solution& sol) {
    auto rep = check_feasible(inst, sol);
    if (!rep.ok())
        throw std::invalid_argument("minimalize: infeasible solution: " +
                                    rep.violations.front().describe());
    Solution out = sol;
    bool merged_any = true;
    while (merged_any) {
        merged_any = false;
        for (int a = 0; a < out.num_bins() && !merged_any; ++a)
            for (int b = a + 1; b < out.num_bins() && !merged_any; ++b)
                if (mergeable(inst, out.bins[a], out.bins[b])) {
                    out.bins[a].insert(out.bins[a].end(), out.bins[b].begin(), out.bins[b].end());
                    out.bins.erase(out.bins.begin() + b);
                    merged_any = true;
                }
    }
    return out;
}

Solution approx_solve(const Instance& inst) {
    return minimalize(inst, first_fit_vbpp(to_vbpp(inst)));
}

Theorem3Family build_theorem3_instance(int d, int capacity) {
    if (d < 1) throw std::invalid_argument("d must be positive");
    const int r = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(d))));
    std::vector<int> sizes(r, capacity);
    std::vector<std::vector<int>> scenarios(r);
    if (r == 1) {
        scenarios[0] = {0}; // degenerate family: a single one-item scenario
        Theorem3Family fam{Instance(1, capacity, std::move(sizes), std::move(scenarios)),
                           Solution{{{0}}}};
        return fam;
    }
    int k = 0;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            scenarios[i].push_back(k);
            scenarios[j].push_back(k);
            ++k;
        }
    Solution ref;
    for (int i = 0; i < r; ++i) ref.bins.push_back({i});
    return {Instance(k, capacity, std::move(sizes), std::move(scenarios)), std::move(ref)};
}

} // namespace bpps
