#include "bpps/io.hpp"

#include <sstream>

#include <json.hpp>

namespace bpps {
namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Instance parse_instance(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1, d = -1, w = -1;
    std::vector<int> sizes;
    std::vector<std::vector<int>> scenarios;

    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank_or_comment(line)) continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> d >> w)) throw ParseError(lineno, "expected header `n d W`");
            if (n < 0 || d < 1 || w < 1) throw ParseError(lineno, "invalid header values");
            continue;
        }
        if (static_cast<int>(sizes.size()) == n)
            throw ParseError(lineno, "extra item line beyond declared n");
        int s, m;
        if (!(ls >> s >> m)) throw ParseError(lineno, "expected `s m k_1 ... k_m`");
        if (m < 1) throw ParseError(lineno, "scenario set must be nonempty");
        std::vector<int> ks(m);
        for (int j = 0; j < m; ++j) {
            if (!(ls >> ks[j])) throw ParseError(lineno, "missing scenario index");
            if (ks[j] < 1 || ks[j] > d)
                throw ParseError(lineno, "scenario index " + std::to_string(ks[j]) +
                                             " out of range [1, " + std::to_string(d) + "]");
            --ks[j]; // to 0-based
        }
        int extra;
        if (ls >> extra) throw ParseError(lineno, "trailing tokens on item line");
        if (s < 1 || s > w)
            throw ParseError(lineno, "item size " + std::to_string(s) + " out of [1, W]");
        sizes.push_back(s);
        scenarios.push_back(std::move(ks));
    }
    if (n < 0) throw ParseError(lineno, "missing header");
    if (static_cast<int>(sizes.size()) != n)
        throw ParseError(lineno, "expected " + std::to_string(n) + " item lines, got " +
                                     std::to_string(sizes.size()));
    return Instance(d, w, std::move(sizes), std::move(scenarios));
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream out;
    out << inst.num_items() << ' ' << inst.num_scenarios() << ' ' << inst.capacity() << '\n';
    for (int i = 0; i < inst.num_items(); ++i) {
        const auto& ks = inst.scenarios_of(i);
        out << inst.size(i) << ' ' << ks.size();
        for (int k : ks) out << ' ' << (k + 1);
        out << '\n';
    }
    return out.str();
}

std::string serialize_solution(const Instance& inst, const Solution& sol,
                               const std::string& algorithm, double time_s,
                               const std::string& status, std::optional<int> lower_bound) {
    auto rep = check_feasible(inst, sol);
    if (!rep.ok())
        throw std::invalid_argument("serialize_solution: infeasible solution: " +
                                    rep.violations.front().describe());
    nlohmann::json j;
    j["bins"] = nlohmann::json::array();
    for (const auto& bin : sol.bins) {
        nlohmann::json jb = nlohmann::json::array();
        for (int i : bin) jb.push_back(i + 1);
        j["bins"].push_back(jb);
    }
    j["val_bpps"] = val_bpps_unchecked(inst, sol);
    j["val_vbpp"] = val_vbpp(sol);
    j["algorithm"] = algorithm;
    j["time_s"] = time_s;
    j["status"] = status;
    if (lower_bound) j["lower_bound"] = *lower_bound;
    return j.dump(2) + "\n";
}

SolutionRecord parse_solution(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    SolutionRecord rec;
    for (const auto& jb : j.at("bins")) {
        std::vector<int> bin;
        for (const auto& ji : jb) bin.push_back(ji.get<int>() - 1);
        rec.solution.bins.push_back(std::move(bin));
    }
    rec.val_bpps = j.at("val_bpps").get<int>();
    rec.val_vbpp = j.at("val_vbpp").get<int>();
    rec.algorithm = j.at("algorithm").get<std::string>();
    rec.time_s = j.at("time_s").get<double>();
    rec.status = j.at("status").get<std::string>();
    if (j.contains("lower_bound")) rec.lower_bound = j["lower_bound"].get<int>();
    return rec;
}

} // namespace bpps
