#include <doctest.h>

#include <chrono>
#include <cmath>

#include "bpps/approx.hpp"
#include "bpps/exact.hpp"
#include "bpps/generate.hpp"
#include "bpps/heuristic.hpp"
#include "test_util.hpp"

using namespace bpps;

TEST_CASE("to_vbpp mapping") {
    Instance inst(3, 100, {50, 40}, {{1}, {0, 1, 2}});
    VbppInstance vb = to_vbpp(inst);
    CHECK(vb.d == 3);
    CHECK(vb.capacity == 100);
    CHECK(vb.consumption[0] == std::vector<int>{0, 50, 0});
    CHECK(vb.consumption[1] == std::vector<int>{40, 40, 40});
}

TEST_CASE("feasibility equivalence under the mapping") {
    Rng rng(47);
    for (int t = 0; t < 100; ++t) {
        Instance inst = testutil::random_small(rng, 1, 8, 6);
        VbppInstance vb = to_vbpp(inst);
        Solution sol = ffd_construct(inst);
        for (int s = 0; s < 3; ++s) {
            CHECK(check_feasible(inst, sol).ok() == vbpp_feasible(vb, sol));
            sol = shake(inst, sol, static_cast<int>(rng.uniform_int(1, 3)), rng);
        }
        // an overloaded bin set must be infeasible for both
        if (inst.num_items() >= 2) {
            Solution all{{std::vector<int>{}}};
            for (int i = 0; i < inst.num_items(); ++i) all.bins[0].push_back(i);
            CHECK(check_feasible(inst, all).ok() == vbpp_feasible(vb, all));
        }
    }
}

TEST_CASE("first_fit_vbpp basics") {
    // conflict in one dimension forces two bins
    VbppInstance vb{2, 100, {{60, 0}, {60, 60}}};
    CHECK(first_fit_vbpp(vb).num_bins() == 2);

    // d=1 reduces to classical first fit on the given order
    VbppInstance ff{1, 100, {{50}, {50}, {60}, {40}}};
    std::vector<int> order = {0, 1, 2, 3};
    Solution s = first_fit_vbpp(ff, order);
    CHECK(s.bins == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
}

TEST_CASE("minimalize merges disjoint-scenario bins and is idempotent") {
    Instance inst(2, 100, {60, 60}, {{0}, {1}});
    Solution two{{{0}, {1}}};
    Solution merged = minimalize(inst, two);
    CHECK(merged.num_bins() == 1);
    CHECK(is_minimal(inst, merged));
    CHECK(minimalize(inst, merged).bins == merged.bins);
    CHECK_THROWS_AS(minimalize(Instance(1, 100, {60, 60}, {{0}, {0}}), Solution{{{0, 1}}}),
                    std::invalid_argument);

    Rng rng(53);
    for (int t = 0; t < 200; ++t) {
        Instance ri = testutil::random_small(rng, 1, 10, 6);
        Solution start = ffd_construct(ri);
        Solution out = minimalize(ri, start);
        REQUIRE(check_feasible(ri, out).ok());
        CHECK(is_minimal(ri, out));
        CHECK(val_vbpp(out) <= val_vbpp(start));
        CHECK(val_bpps(ri, out) <= val_bpps(ri, start));
        CHECK(minimalize(ri, out).bins == out.bins);
    }
}

TEST_CASE("approx_solve pipeline") {
    // single scenario: collapses to classical bin packing by first fit
    Instance single(1, 100, {70, 60, 30, 40}, {{0}, {0}, {0}, {0}});
    Solution sol = approx_solve(single);
    REQUIRE(check_feasible(single, sol).ok());
    CHECK(val_vbpp(sol) == 2); // {70,30} and {60,40}

    Rng rng(59);
    for (int t = 0; t < 80; ++t) {
        Instance inst = testutil::random_small(rng, 1, 8, 6);
        Solution out = approx_solve(inst);
        REQUIRE(check_feasible(inst, out).ok());
        const int opt = val_bpps(inst, solve_enumeration(inst));
        CHECK(val_bpps(inst, out) >= opt);
        // minimal-solution guarantee
        const double root = std::sqrt(double(inst.num_scenarios()));
        CHECK(double(val_vbpp(out)) <= root * val_bpps(inst, out) + 1e-9);
    }
}

TEST_CASE("approx_solve is fast at scale") {
    Instance big = generate_instance(200, 400, 101);
    auto t0 = std::chrono::steady_clock::now();
    Solution sol = approx_solve(big);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    REQUIRE(check_feasible(big, sol).ok());
    CHECK(secs < 1.0);
}

TEST_CASE("worst-case family construction") {
    auto f4 = build_theorem3_instance(4);
    CHECK(f4.instance.num_items() == 2);
    CHECK(f4.instance.num_scenarios() == 1);
    CHECK(f4.instance.size(0) == f4.instance.capacity());
    CHECK(val_vbpp(f4.reference) == 2);
    CHECK(val_bpps(f4.instance, f4.reference) == 2);
    CHECK(val_bpps(f4.instance, solve_enumeration(f4.instance)) == 2);

    auto f9 = build_theorem3_instance(9);
    CHECK(f9.instance.num_items() == 3);
    CHECK(f9.instance.num_scenarios() == 3);
    CHECK(val_vbpp(f9.reference) == 3);
    CHECK(val_bpps(f9.instance, f9.reference) == 2);

    auto f1 = build_theorem3_instance(1);
    CHECK(f1.instance.num_items() == 1);
    CHECK(f1.instance.num_scenarios() == 1);

    for (int d = 1; d <= 50; ++d) {
        auto fam = build_theorem3_instance(d);
        REQUIRE(check_feasible(fam.instance, fam.reference).ok());
        const int r = fam.instance.num_items();
        if (r >= 2) CHECK(is_minimal(fam.instance, fam.reference));
        const double ratio_lb = std::sqrt(double(d)) / 2.0;
        CHECK(double(val_vbpp(fam.reference)) >=
              ratio_lb * val_bpps(fam.instance, fam.reference) - 1e-9);
    }
}

TEST_CASE("objective sandwich") {
    Rng rng(61);
    for (int t = 0; t < 50; ++t) {
        Instance inst = testutil::random_small(rng, 1, 8, 6);
        Solution sol = approx_solve(inst);
        CHECK(val_bpps(inst, sol) <= val_vbpp(sol));
    }
}
