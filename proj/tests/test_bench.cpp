#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bpps/bench.hpp"
#include "bpps/generate.hpp"
#include "bpps/io.hpp"
#include "bpps/solution.hpp"

using namespace bpps;

namespace {

// CSV with the time_s column blanked, for determinism comparisons.
std::string strip_times(const std::vector<BenchRecord>& records) {
    std::ostringstream os;
    for (auto r : records) {
        r.time_s = 0.0;
        os << to_csv(r) << '\n';
    }
    return os.str();
}

} // namespace

TEST_CASE("csv schema") {
    CHECK(csv_header() == "class,n,d,seed,algo,ub,lb,gap,time_s,nodes,cols,status");
    BenchRecord r{"n10_d5", 10, 5, 42, "bp", 3, 3, 0.0, 1.5, 1, 2, "optimal"};
    CHECK(to_csv(r) == "n10_d5,10,5,42,bp,3,3,0,1.5,1,2,optimal");
}

TEST_CASE("run_solve dispatches every algorithm") {
    Instance inst = generate_instance(8, 4, 21);
    for (const std::string algo : {"ffd", "vns", "ff-approx", "bp", "vns+bp", "enum"}) {
        SolveOptions so;
        so.algo = algo;
        so.cmax = 10;
        so.tmax = 5.0;
        so.tlimit = 30.0;
        SolveOutput out = run_solve(inst, so);
        REQUIRE(check_feasible(inst, out.solution).ok());
        CHECK(out.ub >= 1);
        CHECK(out.lb >= 1);
        CHECK(out.lb <= out.ub);
        if (algo == "bp" || algo == "vns+bp" || algo == "enum") {
            CHECK(out.status == "optimal");
            CHECK(out.gap == 0.0);
        } else {
            CHECK(out.status == "heuristic");
        }
    }
    CHECK_THROWS_AS(run_solve(inst, SolveOptions{"nope", 0, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("gap aggregation formula") {
    std::vector<BenchRecord> recs;
    recs.push_back({"c", 10, 5, 1, "bp", 5, 4, 0.2, 1.0, 3, 7, "gap"});
    recs.push_back({"c", 10, 5, 2, "bp", 4, 4, 0.0, 3.0, 1, 5, "optimal"});
    auto rows = aggregate(recs);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].runs == 2);
    CHECK(rows[0].opt_count == 1);
    CHECK(rows[0].mean_gap == doctest::Approx(0.1));
    CHECK(rows[0].mean_time == doctest::Approx(2.0));
    CHECK(rows[0].mean_nodes == doctest::Approx(2.0));
    CHECK(rows[0].mean_cols == doctest::Approx(6.0));
}

TEST_CASE("benchmark grid layout and determinism") {
    BenchConfig cfg;
    cfg.sizes = {10};
    cfg.replicates = 2;
    cfg.algos = {"ffd", "vns"};
    cfg.vns_cmax = 5;
    cfg.seed = 5;
    auto run1 = run_benchmark(cfg);
    // 3 classes (d = 5, 10, 20) x 2 replicates x 2 algos
    CHECK(run1.size() == 12);
    CHECK(run1[0].cls == "n10_d5");
    CHECK(run1.back().cls == "n10_d20");

    auto run2 = run_benchmark(cfg);
    CHECK(strip_times(run1) == strip_times(run2));

    cfg.workers = 3; // parallelism changes nothing but the wall clock
    auto run3 = run_benchmark(cfg);
    CHECK(strip_times(run1) == strip_times(run3));
}

TEST_CASE("benchmark writes parseable instance files") {
    BenchConfig cfg;
    cfg.sizes = {10};
    cfg.replicates = 2;
    cfg.algos = {"ffd"};
    cfg.out_dir = (std::filesystem::temp_directory_path() / "bpps_bench_test").string();
    std::filesystem::remove_all(cfg.out_dir);
    auto records = run_benchmark(cfg);
    int files = 0;
    for (const auto& e : std::filesystem::directory_iterator(cfg.out_dir)) {
        std::ifstream f(e.path());
        std::stringstream ss;
        ss << f.rdbuf();
        Instance inst = parse_instance(ss.str());
        CHECK(inst.num_items() == 10);
        ++files;
    }
    CHECK(files == 6); // 3 classes x 2 replicates
    CHECK(std::filesystem::exists(std::filesystem::path(cfg.out_dir) / "bpps_n10_d5_s0.txt"));
    std::filesystem::remove_all(cfg.out_dir);
}
