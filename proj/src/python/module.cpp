#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bpps/approx.hpp"
#include "bpps/bench.hpp"
#include "bpps/bounds.hpp"
#include "bpps/exact.hpp"
#include "bpps/generate.hpp"
#include "bpps/heuristic.hpp"
#include "bpps/io.hpp"

namespace py = pybind11;
using namespace bpps;

PYBIND11_MODULE(_bpps, m) {
    m.doc() = "Bin packing with scenarios: heuristics, bounds, and exact search";

    py::class_<Instance>(m, "Instance")
        .def(py::init<int, int, std::vector<int>, std::vector<std::vector<int>>>(),
             py::arg("d"), py::arg("capacity"), py::arg("sizes"), py::arg("scenarios"))
        .def_property_readonly("n", &Instance::num_items)
        .def_property_readonly("d", &Instance::num_scenarios)
        .def_property_readonly("capacity", &Instance::capacity)
        .def("size", &Instance::size, py::arg("item"))
        .def("scenarios_of",
             [](const Instance& inst, int i) { return inst.scenarios_of(i); }, py::arg("item"))
        .def("__repr__", [](const Instance& inst) {
            return "<Instance n=" + std::to_string(inst.num_items()) +
                   " d=" + std::to_string(inst.num_scenarios()) +
                   " W=" + std::to_string(inst.capacity()) + ">";
        });

    py::class_<Solution>(m, "Solution")
        .def(py::init<>())
        .def(py::init([](std::vector<std::vector<int>> bins) {
                 Solution s;
                 s.bins = std::move(bins);
                 return s;
             }),
             py::arg("bins"))
        .def_readwrite("bins", &Solution::bins)
        .def("__len__", [](const Solution& s) { return s.bins.size(); });

    m.def("parse_instance", &parse_instance, py::arg("text"));
    m.def("serialize_instance", &serialize_instance, py::arg("instance"));
    m.def(
        "generate_instance",
        [](int n, int d, std::uint64_t seed) { return generate_instance(n, d, seed); },
        py::arg("n"), py::arg("d"), py::arg("seed"));

    m.def("val_bpps", &val_bpps, py::arg("instance"), py::arg("solution"));
    m.def("val_vbpp", &val_vbpp, py::arg("solution"));
    m.def(
        "is_feasible",
        [](const Instance& inst, const Solution& sol) { return check_feasible(inst, sol).ok(); },
        py::arg("instance"), py::arg("solution"));

    m.def("lb_continuous", &lb_continuous, py::arg("instance"));
    m.def(
        "lb_root", [](const Instance& inst) { return lb_root(inst).value; }, py::arg("instance"));

    m.def("ffd", &ffd_construct, py::arg("instance"));
    m.def(
        "vns",
        [](const Instance& inst, double t_max, long long c_max, std::uint64_t seed) {
            VnsConfig cfg;
            cfg.t_max = t_max;
            cfg.c_max = c_max;
            cfg.seed = seed;
            return vns(inst, ffd_construct(inst), cfg).solution;
        },
        py::arg("instance"), py::arg("t_max") = 1800.0, py::arg("c_max") = 500,
        py::arg("seed") = 0);
    m.def("approx_solve", &approx_solve, py::arg("instance"));

    m.def(
        "branch_and_price",
        [](const Instance& inst, double time_limit) {
            Solution warm = ffd_construct(inst);
            BpOptions opts;
            opts.time_limit = time_limit;
            auto res = branch_and_price(inst, &warm, opts);
            py::dict d;
            d["solution"] = res.solution;
            d["lb"] = res.stats.best_lb;
            d["ub"] = res.stats.best_ub;
            d["nodes"] = res.stats.nodes;
            d["columns"] = res.stats.columns;
            d["status"] = res.stats.status;
            d["time_s"] = res.stats.time_s;
            return d;
        },
        py::arg("instance"), py::arg("time_limit") = 3600.0);

    m.def("solve_enumeration", &solve_enumeration, py::arg("instance"), py::arg("max_items") = 12);
}
