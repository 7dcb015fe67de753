#include "bpps/heuristic.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace bpps {

namespace {

// lcm(1..12); every bin count of a fast-path instance divides it.
constexpr long long kFastLcm = 27720;

std::vector<std::vector<int>> bin_scenario_loads(const Instance& inst, const Solution& sol) {
    std::vector<std::vector<int>> load(sol.num_bins(),
                                       std::vector<int>(inst.num_scenarios(), 0));
    for (int b = 0; b < sol.num_bins(); ++b)
        for (int i : sol.bins[b])
            for (int k : inst.scenarios_of(i)) load[b][k] += inst.size(i);
    return load;
}

} // namespace

bool Fitness::operator<(const Fitness& other) const {
    if (fast_ && other.fast_) {
        return static_cast<__int128>(val_ - other.val_) * scale_ < pen_scaled_ - other.pen_scaled_;
    }
    Rational lhs = Rational(val_) - (fast_ ? Rational(static_cast<long long>(pen_scaled_),
                                                      static_cast<long long>(scale_))
                                           : pen_);
    Rational rhs = Rational(other.val_) -
                   (other.fast_ ? Rational(static_cast<long long>(other.pen_scaled_),
                                           static_cast<long long>(other.scale_))
                                : other.pen_);
    return lhs < rhs;
}

bool Fitness::operator==(const Fitness& other) const {
    return !(*this < other) && !(other < *this);
}

double Fitness::to_double() const {
    if (fast_)
        return static_cast<double>(val_) -
               static_cast<double>(pen_scaled_) / static_cast<double>(scale_);
    return static_cast<double>(val_) - pen_.convert_to<double>();
}

Fitness fitness(const Instance& inst, const Solution& sol) {
    auto rep = check_feasible(inst, sol);
    if (!rep.ok())
        throw std::invalid_argument("fitness: infeasible solution: " +
                                    rep.violations.front().describe());
    const auto load = bin_scenario_loads(inst, sol);
    Fitness f;
    f.val_ = val_bpps_unchecked(inst, sol);
    f.fast_ = inst.num_items() <= Fitness::kFastItems;
    const long long w = inst.capacity();
    if (f.fast_) {
        f.scale_ = static_cast<__int128>(w * kFastLcm) * (w * kFastLcm);
        for (int k = 0; k < inst.num_scenarios(); ++k) {
            long long count = 0, sumsq = 0;
            for (int b = 0; b < sol.num_bins(); ++b)
                if (load[b][k] > 0) {
                    ++count;
                    sumsq += static_cast<long long>(load[b][k]) * load[b][k];
                }
            if (count == 0) continue;
            const long long m = kFastLcm / count;
            f.pen_scaled_ += static_cast<__int128>(sumsq) * m * m;
        }
    } else {
        for (int k = 0; k < inst.num_scenarios(); ++k) {
            long long count = 0, sumsq = 0;
            for (int b = 0; b < sol.num_bins(); ++b)
                if (load[b][k] > 0) {
                    ++count;
                    sumsq += static_cast<long long>(load[b][k]) * load[b][k];
                }
            if (count == 0) continue;
            f.pen_ += Rational(sumsq, count * w * count * w);
        }
    }
    return f;
}

Solution ffd_construct(const Instance& inst) {
    std::vector<int> order(inst.num_items());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return inst.size(a) > inst.size(b); });
    Solution sol;
    std::vector<std::vector<int>> load; // per bin, per scenario
    for (int i : order) {
        bool placed = false;
        for (int b = 0; b < sol.num_bins() && !placed; ++b) {
            bool fits = true;
            for (int k : inst.scenarios_of(i))
                if (load[b][k] + inst.size(i) > inst.capacity()) {
                    fits = false;
                    break;
                }
            if (fits) {
                sol.bins[b].push_back(i);
                for (int k : inst.scenarios_of(i)) load[b][k] += inst.size(i);
                placed = true;
            }
        }
        if (!placed) {
            sol.bins.push_back({i});
            load.emplace_back(inst.num_scenarios(), 0);
            for (int k : inst.scenarios_of(i)) load.back()[k] += inst.size(i);
        }
    }
    return sol;
}

namespace {

bool fits_with(const Instance& inst, const std::vector<int>& load, int item, int extra_item = -1,
               int removed_item = -1) {
    // load is a bin's per-scenario load; check adding `item` (and optionally
    // `extra_item`) after removing `removed_item`.
    for (int k : inst.scenarios_of(item)) {
        int l = load[k] + inst.size(item);
        if (extra_item >= 0 && inst.in_scenario(extra_item, k)) l += inst.size(extra_item);
        if (removed_item >= 0 && inst.in_scenario(removed_item, k)) l -= inst.size(removed_item);
        if (l > inst.capacity()) return false;
    }
    if (extra_item >= 0) {
        for (int k : inst.scenarios_of(extra_item)) {
            if (inst.in_scenario(item, k)) continue; // already checked
            int l = load[k] + inst.size(extra_item);
            if (removed_item >= 0 && inst.in_scenario(removed_item, k)) l -= inst.size(removed_item);
            if (l > inst.capacity()) return false;
        }
    }
    return true;
}

} // namespace

std::vector<Move> enumerate_neighbors(const Instance& inst, const Solution& sol, int kappa) {
    if (kappa < 1 || kappa > 4) throw std::invalid_argument("kappa must be in {1..4}");
    std::vector<Move> moves;
    const int m = sol.num_bins();
    const auto load = bin_scenario_loads(inst, sol);
    std::vector<int> bin_of(inst.num_items(), -1);
    for (int b = 0; b < m; ++b)
        for (int i : sol.bins[b]) bin_of[i] = b;

    switch (kappa) {
        case 1: // swap items across bins
            for (int i = 0; i < inst.num_items(); ++i)
                for (int j = i + 1; j < inst.num_items(); ++j) {
                    int bi = bin_of[i], bj = bin_of[j];
                    if (bi == bj) continue;
                    if (fits_with(inst, load[bi], j, -1, i) &&
                        fits_with(inst, load[bj], i, -1, j))
                        moves.push_back({Move::Kind::Swap, i, j, bi, bj, -1});
                }
            break;
        case 2: // relocate an item, fresh bin allowed
            for (int i = 0; i < inst.num_items(); ++i) {
                for (int b = 0; b < m; ++b) {
                    if (b == bin_of[i]) continue;
                    if (fits_with(inst, load[b], i))
                        moves.push_back({Move::Kind::Relocate, i, -1, bin_of[i], b, -1});
                }
                moves.push_back({Move::Kind::Relocate, i, -1, bin_of[i], m, -1});
            }
            break;
        case 3: // move a pair out of one bin; targets may be fresh or coincide
            for (int b1 = 0; b1 < m; ++b1) {
                const auto& bin = sol.bins[b1];
                if (bin.size() < 2) continue;
                for (std::size_t p = 0; p < bin.size(); ++p)
                    for (std::size_t q = p + 1; q < bin.size(); ++q) {
                        const int i = bin[p], j = bin[q];
                        auto targets2 = [&](int b2) {
                            bool i_ok = b2 >= m || fits_with(inst, load[b2], i);
                            if (!i_ok) return;
                            for (int b3 = 0; b3 <= m + (b2 == m ? 1 : 0); ++b3) {
                                if (b3 == b1 || (b3 == m + 1 && b2 != m)) continue;
                                bool ok;
                                if (b3 >= m) {
                                    ok = (b3 == b2) ? bin_feasible(inst, {i, j}) : true;
                                } else if (b3 == b2) {
                                    ok = fits_with(inst, load[b3], i, j);
                                } else {
                                    ok = fits_with(inst, load[b3], j);
                                }
                                if (ok)
                                    moves.push_back({Move::Kind::SplitPair, i, j, b1, b2, b3});
                            }
                        };
                        for (int b2 = 0; b2 <= m; ++b2) {
                            if (b2 == b1) continue;
                            targets2(b2);
                        }
                    }
            }
            break;
        case 4: // dissolve a bin, always applicable
            for (int b = 0; b < m; ++b) moves.push_back({Move::Kind::DissolveBin, -1, -1, b, -1, -1});
            break;
    }
    return moves;
}

Solution apply_move(const Instance& inst, const Solution& sol, const Move& mv) {
    Solution out = sol;
    auto erase_item = [](std::vector<int>& bin, int item) {
        bin.erase(std::find(bin.begin(), bin.end(), item));
    };
    const int m = sol.num_bins();
    switch (mv.kind) {
        case Move::Kind::Swap:
            erase_item(out.bins[mv.bin_a], mv.item_i);
            erase_item(out.bins[mv.bin_b], mv.item_j);
            out.bins[mv.bin_a].push_back(mv.item_j);
            out.bins[mv.bin_b].push_back(mv.item_i);
            break;
        case Move::Kind::Relocate:
            erase_item(out.bins[mv.bin_a], mv.item_i);
            if (mv.bin_b >= m) out.bins.push_back({});
            out.bins[mv.bin_b].push_back(mv.item_i);
            break;
        case Move::Kind::SplitPair: {
            erase_item(out.bins[mv.bin_a], mv.item_i);
            erase_item(out.bins[mv.bin_a], mv.item_j);
            while (std::max(mv.bin_b, mv.bin_c) >= static_cast<int>(out.bins.size()))
                out.bins.push_back({});
            out.bins[mv.bin_b].push_back(mv.item_i);
            out.bins[mv.bin_c].push_back(mv.item_j);
            break;
        }
        case Move::Kind::DissolveBin: {
            std::vector<int> items = out.bins[mv.bin_a];
            out.bins.erase(out.bins.begin() + mv.bin_a);
            auto load = bin_scenario_loads(inst, out);
            for (int i : items) {
                bool placed = false;
                for (std::size_t b = 0; b < out.bins.size() && !placed; ++b) {
                    if (fits_with(inst, load[b], i)) {
                        out.bins[b].push_back(i);
                        for (int k : inst.scenarios_of(i)) load[b][k] += inst.size(i);
                        placed = true;
                    }
                }
                if (!placed) {
                    out.bins.push_back({i});
                    load.emplace_back(inst.num_scenarios(), 0);
                    for (int k : inst.scenarios_of(i)) load.back()[k] += inst.size(i);
                }
            }
            break;
        }
    }
    std::erase_if(out.bins, [](const std::vector<int>& b) { return b.empty(); });
    return out;
}

Solution shake(const Instance& inst, const Solution& sol, int kappa, Rng& rng) {
    auto moves = enumerate_neighbors(inst, sol, kappa);
    if (moves.empty()) return sol;
    auto idx = rng.uniform_int(0, static_cast<std::int64_t>(moves.size()) - 1);
    return apply_move(inst, sol, moves[static_cast<std::size_t>(idx)]);
}

Solution local_search(const Instance& inst, Solution sol, int n_max, double time_limit_s) {
    const auto start = std::chrono::steady_clock::now();
    auto out_of_time = [&] {
        if (time_limit_s < 0.0) return false;
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() >
               time_limit_s;
    };
    Fitness cur = fitness(inst, sol);
    int kappa = 1;
    while (kappa <= n_max) {
        if (out_of_time()) break;
        auto moves = enumerate_neighbors(inst, sol, kappa);
        bool have_best = false;
        Fitness best_f = cur;
        Solution best_sol;
        int since_check = 0;
        for (const auto& mv : moves) {
            if (++since_check >= 64) {
                since_check = 0;
                if (out_of_time()) break;
            }
            Solution cand = apply_move(inst, sol, mv);
            Fitness f = fitness(inst, cand);
            if (!have_best ? f < cur : f < best_f) {
                have_best = true;
                best_f = f;
                best_sol = std::move(cand);
            }
        }
        if (have_best && best_f < cur) {
            sol = std::move(best_sol);
            cur = best_f;
            kappa = 1;
        } else {
            ++kappa;
        }
    }
    return sol;
}

VnsResult vns(const Instance& inst, const Solution& initial, const VnsConfig& cfg) {
    auto rep = check_feasible(inst, initial);
    if (!rep.ok())
        throw std::invalid_argument("vns: infeasible initial solution: " +
                                    rep.violations.front().describe());
    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };

    Rng rng(cfg.seed);
    Solution x = initial;
    Fitness fx = fitness(inst, x);
    VnsResult res;
    res.solution = x;
    int best_val = fx.bpps_value();

    long long c = 0;
    while (elapsed() < cfg.t_max && c < cfg.c_max) {
        int kappa = 1;
        bool improvement = false;
        do {
            const double remaining = cfg.t_max - elapsed();
            if (remaining <= 0.0) break;
            Solution xp = shake(inst, x, kappa, rng);
            Solution xpp = local_search(inst, std::move(xp), cfg.n_max, remaining);
            Fitness fpp = fitness(inst, xpp);
            if (fpp < fx) {
                x = std::move(xpp);
                fx = fpp;
                kappa = 1;
                improvement = true;
                if (fx.bpps_value() < best_val ||
                    (fx.bpps_value() == best_val && fpp < fitness(inst, res.solution))) {
                    best_val = fx.bpps_value();
                    res.solution = x;
                }
            } else {
                ++kappa;
            }
        } while (kappa != cfg.n_max);
        if (improvement) {
            c = 0;
            ++res.stats.improvements;
        } else {
            ++c;
        }
        ++res.stats.iterations;
        res.stats.time_s = elapsed();
    }
    res.stats.time_s = elapsed();
    return res;
}

} // namespace bpps
