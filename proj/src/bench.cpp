#include "bpps/bench.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "bpps/approx.hpp"
#include "bpps/bounds.hpp"
#include "bpps/exact.hpp"
#include "bpps/generate.hpp"
#include "bpps/heuristic.hpp"
#include "bpps/io.hpp"
#include "bpps/rng.hpp"

namespace bpps {

namespace {

double elapsed(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double rel_gap(int ub, int lb) { return ub > 0 ? double(ub - lb) / ub : 0.0; }

} // namespace

SolveOutput run_solve(const Instance& inst, const SolveOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    SolveOutput out;

    if (opts.algo == "ffd") {
        out.solution = ffd_construct(inst);
        out.status = "heuristic";
    } else if (opts.algo == "vns") {
        VnsConfig cfg;
        cfg.t_max = opts.tmax;
        cfg.c_max = opts.cmax;
        cfg.seed = opts.seed;
        out.solution = vns(inst, ffd_construct(inst), cfg).solution;
        out.status = "heuristic";
    } else if (opts.algo == "ff-approx") {
        out.solution = approx_solve(inst);
        out.status = "heuristic";
    } else if (opts.algo == "bp" || opts.algo == "vns+bp") {
        Solution warm;
        if (opts.algo == "vns+bp") {
            VnsConfig cfg;
            cfg.t_max = opts.tmax;
            cfg.c_max = opts.cmax;
            cfg.seed = opts.seed;
            warm = vns(inst, ffd_construct(inst), cfg).solution;
        } else {
            warm = ffd_construct(inst);
        }
        BpOptions bp;
        bp.time_limit = opts.tlimit;
        auto res = branch_and_price(inst, &warm, bp);
        out.solution = std::move(res.solution);
        out.lb = res.stats.best_lb;
        out.nodes = res.stats.nodes;
        out.cols = res.stats.columns;
        out.status = res.stats.status;
    } else if (opts.algo == "enum") {
        out.solution = solve_enumeration(inst);
        out.status = "optimal";
    } else {
        throw std::invalid_argument("unknown algorithm: " + opts.algo);
    }

    out.ub = val_bpps(inst, out.solution);
    if (out.status == "optimal" && out.lb == 0) out.lb = out.ub;
    if (out.lb == 0) out.lb = lb_root(inst).value;
    out.gap = rel_gap(out.ub, out.lb);
    out.time_s = elapsed(t0);
    return out;
}

std::string csv_header() { return "class,n,d,seed,algo,ub,lb,gap,time_s,nodes,cols,status"; }

std::string to_csv(const BenchRecord& r) {
    std::ostringstream os;
    os << r.cls << ',' << r.n << ',' << r.d << ',' << r.seed << ',' << r.algo << ',' << r.ub
       << ',' << r.lb << ',' << r.gap << ',' << r.time_s << ',' << r.nodes << ',' << r.cols
       << ',' << r.status;
    return os.str();
}

std::vector<BenchRow> aggregate(const std::vector<BenchRecord>& records) {
    std::vector<BenchRow> rows;
    std::map<std::pair<std::string, std::string>, int> index;
    for (const auto& r : records) {
        auto key = std::make_pair(r.cls, r.algo);
        auto it = index.find(key);
        if (it == index.end()) {
            it = index.insert({key, static_cast<int>(rows.size())}).first;
            rows.push_back({r.cls, r.algo, 0, 0, 0.0, 0.0, 0.0, 0.0});
        }
        BenchRow& row = rows[it->second];
        ++row.runs;
        if (r.gap == 0.0) ++row.opt_count;
        row.mean_gap += r.gap;
        row.mean_time += r.time_s;
        row.mean_nodes += double(r.nodes);
        row.mean_cols += double(r.cols);
    }
    for (auto& row : rows) {
        row.mean_gap /= row.runs;
        row.mean_time /= row.runs;
        row.mean_nodes /= row.runs;
        row.mean_cols /= row.runs;
    }
    return rows;
}

namespace {

struct BenchTask {
    std::string cls;
    int n = 0;
    int d = 0;
    int replicate = 0;
    std::uint64_t seed = 0;
    std::string algo;
};

} // namespace

std::vector<BenchRecord> run_benchmark(const BenchConfig& cfg, std::ostream* progress) {
    std::vector<BenchTask> tasks;
    int class_index = 0;
    for (int n : cfg.sizes) {
        for (int d : {n / 2, n, 2 * n}) {
            if (d < 1) continue;
            std::string cls = "n" + std::to_string(n) + "_d" + std::to_string(d);
            for (int rep = 0; rep < cfg.replicates; ++rep) {
                const std::uint64_t seed = mix_seed(cfg.seed, class_index, rep);
                for (const auto& algo : cfg.algos)
                    tasks.push_back({cls, n, d, rep, seed, algo});
            }
            ++class_index;
        }
    }

    if (!cfg.out_dir.empty()) {
        std::filesystem::create_directories(cfg.out_dir);
        std::map<std::string, bool> written;
        for (const auto& t : tasks) {
            std::string name = "bpps_n" + std::to_string(t.n) + "_d" + std::to_string(t.d) +
                               "_s" + std::to_string(t.replicate) + ".txt";
            if (written[name]) continue;
            written[name] = true;
            Instance inst = generate_instance(t.n, t.d, t.seed);
            std::ofstream f(std::filesystem::path(cfg.out_dir) / name);
            f << serialize_instance(inst);
        }
    }

    std::vector<BenchRecord> records(tasks.size());
    std::atomic<std::size_t> next{0};
    std::mutex log_mutex;

    auto worker = [&] {
        while (true) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= tasks.size()) return;
            const BenchTask& t = tasks[idx];
            Instance inst = generate_instance(t.n, t.d, t.seed);
            SolveOptions so;
            so.algo = t.algo;
            so.seed = t.seed;
            so.tmax = cfg.vns_tmax;
            so.cmax = cfg.vns_cmax;
            so.tlimit = cfg.bp_tlimit;
            SolveOutput out = run_solve(inst, so);
            records[idx] = {t.cls,   t.n,     t.d,       t.seed,    t.algo, out.ub,
                            out.lb,  out.gap, out.time_s, out.nodes, out.cols, out.status};
            if (progress) {
                std::lock_guard<std::mutex> lock(log_mutex);
                *progress << to_csv(records[idx]) << '\n' << std::flush;
            }
        }
    };

    const int workers = std::max(1, cfg.workers);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return records;
}

} // namespace bpps
