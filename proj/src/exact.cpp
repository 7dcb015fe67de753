#include "bpps/exact.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <queue>
#include <set>

#include "bpps/bounds.hpp"
#include "bpps/heuristic.hpp"

namespace bpps {

namespace {

constexpr double kTol = 1e-6;
constexpr long long kPricingBudget = 20'000'000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Restricted master problem shared by the whole tree: n covering rows,
/// d scenario rows coupled to the bin-count variable F.
class Master {
public:
    Master(const Instance& inst) : inst_(inst), solver_(build_base(inst)) {
        f_index_ = 0; // F is the first structural column
    }

    const Instance& inst_;
    SimplexSolver solver_;
    std::vector<Column> pool_;
    std::set<std::vector<int>> seen_;
    int f_index_;

    // Returns pool index, or -1 when the pattern is already pooled.
    //
    // Pattern columns get bounds [0, n] rather than [0, 1]: the binary
    // restriction is redundant in the LP relaxation (a second copy of a
    // pattern only raises F), and a column sitting at upper bound 1 would
    // otherwise price positive forever.
    int add_pattern(Pattern p) {
        if (!seen_.insert(p.items).second) return -1;
        std::vector<std::pair<int, double>> entries;
        for (int i : p.items) entries.push_back({i, 1.0});
        for (int k : p.touched_scenarios)
            entries.push_back({inst_.num_items() + k, 1.0});
        Column col;
        col.lp_index = solver_.add_column(0.0, std::move(entries), 0.0,
                                          static_cast<double>(inst_.num_items()));
        col.pattern = std::move(p);
        pool_.push_back(std::move(col));
        return static_cast<int>(pool_.size()) - 1;
    }

    void apply_fixes(const BranchState& state) {
        for (auto& col : pool_)
            solver_.set_upper(col.lp_index,
                              state.column_violates(inst_, col.pattern)
                                  ? 0.0
                                  : static_cast<double>(inst_.num_items()));
    }

    DualSolution extract_duals(const LpSolution& sol) const {
        DualSolution d;
        d.alpha.resize(inst_.num_items());
        d.beta.resize(inst_.num_scenarios());
        for (int i = 0; i < inst_.num_items(); ++i) d.alpha[i] = std::max(sol.y[i], 0.0);
        for (int k = 0; k < inst_.num_scenarios(); ++k)
            d.beta[k] = std::min(sol.y[inst_.num_items() + k], 0.0);
        return d;
    }

    double column_value(const LpSolution& sol, int pool_idx) const {
        return sol.x[pool_[pool_idx].lp_index];
    }

private:
    static LpProblem build_base(const Instance& inst) {
        LpProblem lp;
        for (int i = 0; i < inst.num_items(); ++i) lp.add_row(RowSense::Ge, 1.0);
        for (int k = 0; k < inst.num_scenarios(); ++k) lp.add_row(RowSense::Le, 0.0);
        std::vector<std::pair<int, double>> f_entries;
        for (int k = 0; k < inst.num_scenarios(); ++k)
            f_entries.push_back({inst.num_items() + k, -1.0});
        lp.add_column(1.0, std::move(f_entries), 0.0, static_cast<double>(inst.num_items()));
        return lp;
    }
};

struct CgOutcome {
    bool infeasible = false;
    bool proven = true;  // LP bound valid (pricing ran to completion)
    double lp_value = 0.0;
    long long new_columns = 0;
    LpSolution rmp;
};

CgOutcome run_column_generation(Master& master, const BranchState& state, Clock::time_point t0,
                                double time_limit) {
    CgOutcome out;
    while (true) {
        out.rmp = master.solver_.solve();
        if (out.rmp.status == LpStatus::Infeasible) {
            out.infeasible = true;
            return out;
        }
        if (out.rmp.status != LpStatus::Optimal) {
            out.proven = false;
            return out;
        }
        out.lp_value = out.rmp.objective;
        if (seconds_since(t0) > time_limit) {
            out.proven = false;
            return out;
        }
        auto duals = master.extract_duals(out.rmp);
        auto priced = price(master.inst_, duals, state, kPricingBudget,
                            std::max(0.0, time_limit - seconds_since(t0)));
        if (!priced.proven) {
            out.proven = false;
            return out;
        }
        if (priced.value <= kTol) return out; // LP optimal for the node
        int idx = master.add_pattern(std::move(priced.pattern));
        if (idx < 0) {
            // numerically positive value on an already-pooled pattern
            out.proven = false;
            return out;
        }
        ++out.new_columns;
    }
}

struct IpSearch {
    const Instance& inst;
    const std::vector<Column>& pool;
    std::vector<char> usable;                 // per pool column
    std::vector<std::vector<int>> covering;   // per item: usable columns containing it
    std::vector<int> cover_count;             // per item
    std::vector<int> touch_count;             // per scenario
    int cur_max = 0;
    int best_val;
    std::vector<int> chosen;
    std::vector<int> best_chosen;
    bool found = false;
    long long budget;
    Clock::time_point deadline;
    long long tick = 0;

    void dfs() {
        if (budget-- < 0) return;
        if ((++tick & 1023) == 0 && Clock::now() > deadline) {
            budget = -1;
            return;
        }
        if (cur_max >= best_val) return;
        int item = -1;
        for (int i = 0; i < inst.num_items(); ++i)
            if (cover_count[i] == 0) {
                item = i;
                break;
            }
        if (item < 0) {
            best_val = cur_max;
            best_chosen = chosen;
            found = true;
            return;
        }
        for (int c : covering[item]) {
            const auto& p = pool[c].pattern;
            std::vector<int> newly;
            const int saved_max = cur_max;
            for (int i : p.items) ++cover_count[i];
            for (int k : p.touched_scenarios) {
                ++touch_count[k];
                cur_max = std::max(cur_max, touch_count[k]);
            }
            chosen.push_back(c);
            dfs();
            chosen.pop_back();
            cur_max = saved_max;
            for (int k : p.touched_scenarios) --touch_count[k];
            for (int i : p.items) --cover_count[i];
            if (budget < 0) return;
        }
    }
};

/// Converts selected (possibly overlapping) columns to a partition: later
/// bins drop items already packed, empty bins vanish.
Solution solution_from_columns(const Instance& inst, const std::vector<Column>& pool,
                               const std::vector<int>& selected) {
    Solution sol;
    std::vector<char> used(inst.num_items(), 0);
    for (int c : selected) {
        std::vector<int> bin;
        for (int i : pool[c].pattern.items)
            if (!used[i]) {
                used[i] = 1;
                bin.push_back(i);
            }
        if (!bin.empty()) sol.bins.push_back(std::move(bin));
    }
    return sol;
}

std::optional<Solution> restricted_master_ip(const Instance& inst, Master& master,
                                             const BranchState& state, int incumbent,
                                             const BpOptions& opts) {
    IpSearch s{inst, master.pool_};
    s.usable.resize(master.pool_.size());
    s.covering.assign(inst.num_items(), {});
    for (int c = 0; c < static_cast<int>(master.pool_.size()); ++c) {
        s.usable[c] = !state.column_violates(inst, master.pool_[c].pattern);
        if (s.usable[c])
            for (int i : master.pool_[c].pattern.items) s.covering[i].push_back(c);
    }
    s.cover_count.assign(inst.num_items(), 0);
    s.touch_count.assign(inst.num_scenarios(), 0);
    s.best_val = incumbent;
    s.budget = opts.ip_node_budget;
    s.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(opts.ip_time_budget));
    s.dfs();
    if (!s.found) return std::nullopt;
    Solution sol = solution_from_columns(inst, master.pool_, s.best_chosen);
    if (!check_feasible(inst, sol).ok()) return std::nullopt;
    return sol;
}

// Flows and integrality are judged on x clamped to [0, 1]: any x > 1 can be
// reduced to 1 without losing feasibility or objective (coverage stays >= 1,
// scenario loads only drop), so only the clamped value is meaningful.
std::optional<std::pair<int, int>> find_branch_pair(const Instance& inst, const Master& master,
                                                    const BranchState& state,
                                                    const LpSolution& rmp) {
    std::map<std::pair<int, int>, double> flow;
    for (int c = 0; c < static_cast<int>(master.pool_.size()); ++c) {
        const double x = std::min(master.column_value(rmp, c), 1.0);
        if (x <= kTol) continue;
        std::set<int> reps;
        for (int i : master.pool_[c].pattern.items) reps.insert(state.find(i));
        for (auto a = reps.begin(); a != reps.end(); ++a)
            for (auto b = std::next(a); b != reps.end(); ++b) flow[{*a, *b}] += x;
    }
    std::optional<std::pair<int, int>> best;
    double best_dist = 1.0;
    for (const auto& [pair, f] : flow) {
        if (f <= kTol || f >= 1.0 - kTol) continue;
        const double dist = std::abs(f - 0.5);
        if (dist < best_dist - 1e-12) {
            best_dist = dist;
            best = pair;
        }
    }
    if (best) return best;
    // Fallback for degenerate vertices whose pair flows are all integral:
    // every co-occurring pair over distinct representatives is still an
    // undecided together/apart disjunction, so branching on one remains
    // valid and strictly grows the branch state.
    for (const auto& [pair, f] : flow) {
        const double dist = std::abs(f - 0.5);
        if (f > kTol && (!best || dist < best_dist - 1e-12)) {
            best_dist = dist;
            best = pair;
        }
    }
    (void)inst;
    return best;
}

bool solution_integral(const Master& master, const LpSolution& rmp) {
    for (int c = 0; c < static_cast<int>(master.pool_.size()); ++c) {
        const double x = std::min(master.column_value(rmp, c), 1.0);
        if (x > kTol && x < 1.0 - kTol) return false;
    }
    const double f = rmp.objective;
    return std::abs(f - std::round(f)) <= kTol;
}

struct Node {
    BranchState state;
    double lb;
    int depth;
    long long id;
};

struct NodeOrder {
    bool operator()(const Node& a, const Node& b) const {
        if (a.lb != b.lb) return a.lb > b.lb;     // best bound first
        if (a.depth != b.depth) return a.depth < b.depth; // then depth-first
        return a.id > b.id;
    }
};

} // namespace

BpResult branch_and_price(const Instance& inst, const Solution* warm_start,
                          const BpOptions& opts) {
    const auto t0 = Clock::now();
    BpResult res;
    const int n = inst.num_items();
    if (n == 0) {
        res.stats.status = "optimal";
        return res;
    }

    const int root_lb = lb_root(inst).value;

    Master master(inst);
    for (int i = 0; i < n; ++i) master.add_pattern(Pattern::from_items(inst, {i}));

    // The VND polish and the root VNS burst pay off on mid-size instances;
    // beyond ~60 items a single descent pass with exact rational fitness can
    // eat the whole time budget, so fall back to plain warm starts there.
    const bool use_primal_heuristics = n <= 60;

    int ub = n + 1;
    Solution best;
    if (warm_start) {
        best = use_primal_heuristics ? local_search(inst, *warm_start) : *warm_start;
        ub = val_bpps(inst, best);
        if (opts.warm_columns) {
            for (const auto& bin : warm_start->bins)
                master.add_pattern(Pattern::from_items(inst, bin));
            for (const auto& bin : best.bins)
                master.add_pattern(Pattern::from_items(inst, bin));
        }
    }

    // Root primal heuristic: a short deterministic VNS burst on top of the
    // (polished) warm start. The incumbent drives fathoming, and first-fit
    // alone often sits 2-3 bins above the optimum on larger instances.
    if (use_primal_heuristics && ub > root_lb && n > 1) {
        VnsConfig vcfg;
        vcfg.t_max = std::min(30.0, 0.05 * opts.time_limit);
        vcfg.c_max = 100;
        vcfg.seed = 0x9E3779B97F4A7C15ull;
        auto vr = vns(inst, warm_start ? best : ffd_construct(inst), vcfg);
        const int v = val_bpps(inst, vr.solution);
        if (v < ub) {
            ub = v;
            best = vr.solution;
            if (opts.warm_columns)
                for (const auto& bin : best.bins)
                    master.add_pattern(Pattern::from_items(inst, bin));
        }
    }

    std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
    long long next_id = 0;
    open.push({BranchState(n), static_cast<double>(root_lb), 0, next_id++});

    int global_lb = 0;
    bool timed_out = false;

    while (!open.empty()) {
        if (seconds_since(t0) > opts.time_limit) {
            timed_out = true;
            break;
        }
        Node node = open.top();
        global_lb = std::max(global_lb, static_cast<int>(std::ceil(open.top().lb - kTol)));
        if (global_lb >= ub) break; // proven optimal
        open.pop();
        if (static_cast<int>(std::ceil(node.lb - kTol)) >= ub) continue;
        if (!node.state.consistent()) continue;

        master.apply_fixes(node.state);
        auto cg = run_column_generation(master, node.state, t0, opts.time_limit);
        ++res.stats.nodes;
        res.stats.columns += cg.new_columns;
        if (cg.infeasible) continue;

        double node_lb = node.lb;
        if (cg.proven) node_lb = std::max(node_lb, cg.lp_value);
        else {
            // bound not proven: keep the node open with its inherited bound
            if (seconds_since(t0) > opts.time_limit) {
                open.push(node);
                timed_out = true;
                break;
            }
        }
        if (cg.proven && static_cast<int>(std::ceil(node_lb - kTol)) >= ub) continue;

        if (cg.proven && solution_integral(master, cg.rmp)) {
            std::vector<int> selected;
            for (int c = 0; c < static_cast<int>(master.pool_.size()); ++c)
                if (master.column_value(cg.rmp, c) > 0.5) selected.push_back(c);
            Solution sol = solution_from_columns(inst, master.pool_, selected);
            if (check_feasible(inst, sol).ok()) {
                const int v = val_bpps_unchecked(inst, sol);
                if (v < ub) {
                    ub = v;
                    best = std::move(sol);
                }
            }
            continue; // node solved to integrality
        }

        if (auto sol = restricted_master_ip(inst, master, node.state, ub, opts)) {
            int v = val_bpps_unchecked(inst, *sol);
            if (v < ub) {
                Solution polished = use_primal_heuristics
                                        ? local_search(inst, std::move(*sol))
                                        : std::move(*sol);
                const int pv = val_bpps_unchecked(inst, polished);
                if (pv < v) v = pv;
                ub = v;
                best = std::move(polished);
            }
        }
        if (static_cast<int>(std::ceil(node_lb - kTol)) >= ub && cg.proven) continue;

        auto pair = find_branch_pair(inst, master, node.state, cg.rmp);
        if (!pair) {
            // fractional solution with no usable pair: cannot refine further
            open.push({node.state, node_lb, node.depth, next_id++});
            timed_out = true;
            break;
        }
        auto [l, m] = *pair;
        Node together{node.state, node_lb, node.depth + 1, next_id++};
        together.state.merge(l, m);
        if (together.state.consistent()) open.push(std::move(together));
        Node apart{node.state, node_lb, node.depth + 1, next_id++};
        apart.state.forbid(l, m);
        if (apart.state.consistent()) open.push(std::move(apart));
    }

    if (open.empty() && !timed_out) {
        global_lb = ub;
    } else {
        int open_min = ub;
        // drain to find the weakest open bound
        while (!open.empty()) {
            open_min = std::min(open_min, static_cast<int>(std::ceil(open.top().lb - kTol)));
            open.pop();
        }
        global_lb = std::max(global_lb, std::min(open_min, ub));
    }
    global_lb = std::max(global_lb, root_lb);

    if (ub > n) {
        // no incumbent found (time limit before any IP solution): fall back
        // to singleton bins, always feasible
        best.bins.clear();
        for (int i = 0; i < n; ++i) best.bins.push_back({i});
        ub = val_bpps_unchecked(inst, best);
    }
    global_lb = std::min(global_lb, ub);

    res.solution = std::move(best);
    res.stats.best_lb = global_lb;
    res.stats.best_ub = ub;
    res.stats.time_s = seconds_since(t0);
    res.stats.status = (global_lb >= ub) ? "optimal" : "gap";
    return res;
}

} // namespace bpps
