#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bpps/approx.hpp"
#include "bpps/bench.hpp"
#include "bpps/bounds.hpp"
#include "bpps/generate.hpp"
#include "bpps/io.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw CLI::ValidationError("cannot open " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void write_out(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out);
    if (!f) throw CLI::ValidationError("cannot write " + out);
    f << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bin packing with scenarios: generator, heuristics, bounds, exact solver"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a random instance");
    bpps::GenParams gp;
    std::string gen_out;
    gen->add_option("--n", gp.n, "Number of items")->required();
    gen->add_option("--d", gp.d, "Number of scenarios")->required();
    gen->add_option("--seed", gp.seed, "Random seed");
    gen->add_option("--capacity", gp.capacity, "Bin capacity");
    gen->add_option("--size-lo", gp.size_lo, "Minimum item size");
    gen->add_option("--size-hi", gp.size_hi, "Maximum item size");
    gen->add_option("--p", gp.membership_p, "Scenario membership probability");
    gen->add_option("--out", gen_out, "Output file (default stdout)");

    // solve
    auto* solve = app.add_subcommand("solve", "Solve an instance file");
    std::string solve_path, solve_out;
    bpps::SolveOptions so;
    solve->add_option("instance", solve_path, "Instance file")->required();
    solve->add_option("--algo", so.algo, "ffd | vns | ff-approx | bp | vns+bp | enum")
        ->check(CLI::IsMember({"ffd", "vns", "ff-approx", "bp", "vns+bp", "enum"}));
    solve->add_option("--seed", so.seed, "Random seed");
    solve->add_option("--tmax", so.tmax, "VNS time budget (s)");
    solve->add_option("--cmax", so.cmax, "VNS non-improving iteration budget");
    solve->add_option("--tlimit", so.tlimit, "Exact solver time budget (s)");
    solve->add_option("--out", solve_out, "Output file (default stdout)");

    // bench
    auto* bench = app.add_subcommand("bench", "Run the benchmark grid");
    bpps::BenchConfig bc;
    std::string bench_out, bench_summary;
    bench->add_option("--sizes", bc.sizes, "Instance sizes n (d grid: n/2, n, 2n)");
    bench->add_option("--replicates", bc.replicates, "Replicates per class");
    bench->add_option("--seed", bc.seed, "Base seed");
    bench->add_option("--algo", bc.algos, "Algorithms to run (repeatable)");
    bench->add_option("--tmax", bc.vns_tmax, "VNS time budget (s)");
    bench->add_option("--cmax", bc.vns_cmax, "VNS non-improving iteration budget");
    bench->add_option("--tlimit", bc.bp_tlimit, "Exact solver time budget (s)");
    bench->add_option("--workers", bc.workers, "Parallel workers");
    bench->add_option("--instances-dir", bc.out_dir, "Also write instance files here");
    bench->add_option("--out", bench_out, "CSV output file (default stdout)");
    bench->add_option("--summary", bench_summary, "Aggregated summary output file");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "Report lower bounds for an instance");
    std::string bounds_path;
    bounds->add_option("instance", bounds_path, "Instance file")->required();

    // gen-theorem3
    auto* gent3 = app.add_subcommand("gen-theorem3", "Generate a worst-case family instance");
    int t3_d = 1, t3_cap = 100;
    std::string t3_out;
    gent3->add_option("--d", t3_d, "Number of scenarios")->required();
    gent3->add_option("--capacity", t3_cap, "Bin capacity");
    gent3->add_option("--out", t3_out, "Output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            write_out(gen_out, bpps::serialize_instance(bpps::generate_instance(gp)));
        } else if (solve->parsed()) {
            bpps::Instance inst = bpps::parse_instance(read_file(solve_path));
            bpps::SolveOutput out = bpps::run_solve(inst, so);
            write_out(solve_out, bpps::serialize_solution(inst, out.solution, so.algo,
                                                          out.time_s, out.status, out.lb));
            std::cerr << "algo=" << so.algo << " ub=" << out.ub << " lb=" << out.lb
                      << " gap=" << out.gap << " time_s=" << out.time_s
                      << " status=" << out.status << '\n';
        } else if (bench->parsed()) {
            std::ostream* progress = bench_out.empty() ? nullptr : &std::cerr;
            auto records = bpps::run_benchmark(bc, progress);
            std::ostringstream csv;
            csv << bpps::csv_header() << '\n';
            for (const auto& r : records) csv << bpps::to_csv(r) << '\n';
            write_out(bench_out, csv.str());
            if (!bench_summary.empty()) {
                std::ostringstream sum;
                sum << "class,algo,runs,opt,mean_gap,mean_time,mean_nodes,mean_cols\n";
                for (const auto& row : bpps::aggregate(records))
                    sum << row.cls << ',' << row.algo << ',' << row.runs << ',' << row.opt_count
                        << ',' << row.mean_gap << ',' << row.mean_time << ',' << row.mean_nodes
                        << ',' << row.mean_cols << '\n';
                write_out(bench_summary, sum.str());
            }
        } else if (bounds->parsed()) {
            bpps::Instance inst = bpps::parse_instance(read_file(bounds_path));
            auto rb = bpps::lb_root(inst);
            std::cout << "continuous=" << rb.continuous << " dff=" << rb.dff
                      << " best_lambda=" << rb.best_lambda << " lb=" << rb.value << '\n';
        } else if (gent3->parsed()) {
            auto fam = bpps::build_theorem3_instance(t3_d, t3_cap);
            write_out(t3_out, bpps::serialize_instance(fam.instance));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
