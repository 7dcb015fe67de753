#include "bpps/exact.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>

namespace bpps {

BranchState::BranchState(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
}

int BranchState::find(int item) const {
    int r = item;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[item] != r) {
        int next = parent_[item];
        parent_[item] = r;
        item = next;
    }
    return r;
}

void BranchState::merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b); // smallest member stays the representative
    parent_[b] = a;
}

void BranchState::forbid(int a, int b) { apart_.push_back({std::min(a, b), std::max(a, b)}); }

bool BranchState::consistent() const {
    for (auto [a, b] : apart_)
        if (find(a) == find(b)) return false;
    return true;
}

bool BranchState::column_violates(const Instance& inst, const Pattern& p) const {
    std::vector<char> in(parent_.size(), 0);
    for (int i : p.items) in[i] = 1;
    // a merged class must be all-in or all-out
    for (const auto& cls : classes()) {
        if (cls.size() < 2) continue;
        int cnt = 0;
        for (int i : cls) cnt += in[i];
        if (cnt != 0 && cnt != static_cast<int>(cls.size())) return true;
    }
    for (auto [a, b] : apart_)
        if (in[a] && in[b]) return true;
    (void)inst;
    return false;
}

std::vector<std::vector<int>> BranchState::classes() const {
    std::map<int, std::vector<int>> by_rep;
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i) by_rep[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    out.reserve(by_rep.size());
    for (auto& [rep, members] : by_rep) out.push_back(std::move(members));
    return out;
}

namespace {

struct PricingSearch {
    const Instance& inst;
    std::vector<PricedItem> items;                 // sorted by alpha descending
    std::vector<std::vector<int>> banned_with;     // apart, indices into items
    std::vector<double> suffix_alpha;              // sum of positive alphas from idx on
    std::vector<double> beta;
    std::vector<int> load;                         // per scenario
    std::vector<char> touched;
    std::vector<int> ban_count;
    std::vector<int> chosen;
    double best_value = 0.0;
    std::vector<int> best_items;                   // original items
    long long budget;
    bool proven = true;
    bool has_deadline = false;
    std::chrono::steady_clock::time_point deadline;
    long long visited = 0;

    void dfs(int idx, double value) {
        if (!proven) return;
        if (budget >= 0 && --budget < 0) {
            proven = false;
            return;
        }
        if (has_deadline && (++visited & 8191) == 0 &&
            std::chrono::steady_clock::now() > deadline) {
            proven = false;
            return;
        }
        if (idx == static_cast<int>(items.size())) {
            if (value > best_value) {
                best_value = value;
                best_items.clear();
                for (int c : chosen)
                    best_items.insert(best_items.end(), items[c].members.begin(),
                                      items[c].members.end());
            }
            return;
        }
        if (value + suffix_alpha[idx] <= best_value) return;
        const auto& it = items[idx];
        // include
        if (ban_count[idx] == 0) {
            bool fits = true;
            for (auto [k, sz] : it.loads)
                if (load[k] + sz > inst.capacity()) {
                    fits = false;
                    break;
                }
            if (fits) {
                double delta = it.alpha;
                std::vector<int> newly;
                for (auto [k, sz] : it.loads) {
                    load[k] += sz;
                    if (!touched[k]) {
                        touched[k] = 1;
                        newly.push_back(k);
                        delta += beta[k];
                    }
                }
                for (int b : banned_with[idx]) ++ban_count[b];
                chosen.push_back(idx);
                dfs(idx + 1, value + delta);
                chosen.pop_back();
                for (int b : banned_with[idx]) --ban_count[b];
                for (int k : newly) touched[k] = 0;
                for (auto [k, sz] : it.loads) load[k] -= sz;
            }
        }
        // exclude
        dfs(idx + 1, value);
    }
};

} // namespace

PriceResult price(const Instance& inst, const DualSolution& duals, const BranchState& state,
                  long long node_budget, double time_limit_s) {
    PricingSearch s{inst};
    s.budget = node_budget;
    if (time_limit_s >= 0.0) {
        s.has_deadline = true;
        s.deadline = std::chrono::steady_clock::now() +
                     std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                         std::chrono::duration<double>(time_limit_s));
    }
    s.beta = duals.beta;
    for (double& b : s.beta) b = std::min(b, 0.0);

    for (auto& cls : state.classes()) {
        PricedItem it;
        it.members = cls;
        std::map<int, int> loads;
        for (int i : cls) {
            it.alpha += std::max(duals.alpha[i], 0.0);
            for (int k : inst.scenarios_of(i)) loads[k] += inst.size(i);
        }
        it.loads.assign(loads.begin(), loads.end());
        s.items.push_back(std::move(it));
    }
    std::stable_sort(s.items.begin(), s.items.end(), [](const PricedItem& a, const PricedItem& b) {
        if (a.alpha != b.alpha) return a.alpha > b.alpha;
        return a.members.front() < b.members.front();
    });

    std::vector<int> pos(inst.num_items(), -1);
    for (int idx = 0; idx < static_cast<int>(s.items.size()); ++idx)
        for (int i : s.items[idx].members) pos[i] = idx;
    s.banned_with.assign(s.items.size(), {});
    for (auto [a, b] : state.apart_pairs()) {
        int pa = pos[a], pb = pos[b];
        if (pa == pb) continue; // inconsistent node, caller prunes via consistent()
        s.banned_with[pa].push_back(pb);
        s.banned_with[pb].push_back(pa);
    }

    s.suffix_alpha.assign(s.items.size() + 1, 0.0);
    for (int i = static_cast<int>(s.items.size()) - 1; i >= 0; --i)
        s.suffix_alpha[i] = s.suffix_alpha[i + 1] + std::max(s.items[i].alpha, 0.0);

    s.load.assign(inst.num_scenarios(), 0);
    s.touched.assign(inst.num_scenarios(), 0);
    s.ban_count.assign(s.items.size(), 0);
    s.dfs(0, 0.0);

    PriceResult res;
    res.value = s.best_value;
    res.proven = s.proven;
    res.pattern = Pattern::from_items(inst, s.best_items);
    return res;
}

} // namespace bpps
