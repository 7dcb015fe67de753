#ifndef BPPS_BENCH_HPP
#define BPPS_BENCH_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "bpps/instance.hpp"
#include "bpps/solution.hpp"

namespace bpps {

/// One algorithm run on one instance.
struct SolveOptions {
    std::string algo = "vns"; // ffd | vns | ff-approx | bp | vns+bp | enum
    std::uint64_t seed = 0;
    double tmax = 1800.0;     // VNS wall-clock budget
    long long cmax = 500;     // VNS non-improving iteration budget
    double tlimit = 3600.0;   // branch-and-price wall-clock budget
};

struct SolveOutput {
    Solution solution;
    int ub = 0;
    int lb = 0;
    double gap = 0.0;
    double time_s = 0.0;
    long long nodes = 0;
    long long cols = 0;
    std::string status; // "optimal" | "gap" | "heuristic"
};

SolveOutput run_solve(const Instance& inst, const SolveOptions& opts);

struct BenchConfig {
    std::vector<int> sizes = {10, 50, 100, 200}; // d in {n/2, n, 2n} per size
    int replicates = 10;
    std::uint64_t seed = 20240901;
    std::vector<std::string> algos = {"vns", "bp"};
    double vns_tmax = 60.0;
    long long vns_cmax = 500;
    double bp_tlimit = 120.0;
    int workers = 1;
    std::string out_dir; // when nonempty, instances are written there
};

struct BenchRecord {
    std::string cls;
    int n = 0;
    int d = 0;
    std::uint64_t seed = 0;
    std::string algo;
    int ub = 0;
    int lb = 0;
    double gap = 0.0;
    double time_s = 0.0;
    long long nodes = 0;
    long long cols = 0;
    std::string status;
};

std::string csv_header();
std::string to_csv(const BenchRecord& rec);

/// Aggregate over one (class, algo) cell, mirroring the usual results table.
struct BenchRow {
    std::string cls;
    std::string algo;
    int runs = 0;
    int opt_count = 0;      // runs with gap == 0
    double mean_gap = 0.0;
    double mean_time = 0.0;
    double mean_nodes = 0.0;
    double mean_cols = 0.0;
};

std::vector<BenchRow> aggregate(const std::vector<BenchRecord>& records);

/// Runs the full benchmark grid; records come back in deterministic task
/// order regardless of the worker count.
std::vector<BenchRecord> run_benchmark(const BenchConfig& cfg, std::ostream* progress = nullptr);

} // namespace bpps

#endif
