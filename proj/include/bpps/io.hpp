#ifndef BPPS_IO_HPP
#define BPPS_IO_HPP

#include <optional>
#include <string>

#include "bpps/instance.hpp"
#include "bpps/solution.hpp"

namespace bpps {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

/// Text format:
///   line 1: `n d W`
///   next n lines: `s_i m_i k_1 ... k_{m_i}` with sorted 1-based scenario indices
/// `#` comment lines and blank lines are ignored.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

/// Machine-readable result record (JSON). Bins and item indices are 1-based
/// in the serialized form.
struct SolutionRecord {
    Solution solution;
    int val_bpps = 0;
    int val_vbpp = 0;
    std::string algorithm;
    double time_s = 0.0;
    std::string status;                // "optimal" | "gap" | "heuristic"
    std::optional<int> lower_bound;
};

/// Throws std::invalid_argument if the solution is infeasible for `inst`.
std::string serialize_solution(const Instance& inst, const Solution& sol,
                               const std::string& algorithm, double time_s,
                               const std::string& status,
                               std::optional<int> lower_bound = std::nullopt);

SolutionRecord parse_solution(const std::string& text);

} // namespace bpps

#endif
