#ifndef BPPS_SIMPLEX_HPP
#define BPPS_SIMPLEX_HPP

#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace bpps {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class RowSense : char { Le = 'L', Ge = 'G', Eq = 'E' };

/// Min-cost LP with row senses and per-variable bounds.
struct LpProblem {
    int num_rows = 0;
    std::vector<RowSense> sense;
    std::vector<double> rhs;

    std::vector<double> obj;
    std::vector<double> lower, upper;
    std::vector<std::vector<std::pair<int, double>>> cols; // sparse, row-indexed

    int num_cols() const { return static_cast<int>(obj.size()); }
    int add_row(RowSense s, double b);
    int add_column(double c, std::vector<std::pair<int, double>> entries, double lo, double hi);
};

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct LpSolution {
    LpStatus status = LpStatus::IterationLimit;
    std::vector<double> x; // structural variables
    std::vector<double> y; // one dual per row
    double objective = 0.0;
};

/// Revised simplex for bounded variables (Dantzig pricing, Bland fallback
/// after a degeneracy stall). Keeps its basis between solves, so re-solving
/// after add_column / bound changes warm-starts.
class SimplexSolver {
public:
    explicit SimplexSolver(LpProblem problem);

    LpSolution solve();

    /// Appends a structural column; it starts nonbasic at its lower bound.
    int add_column(double c, std::vector<std::pair<int, double>> entries, double lo, double hi);

    void set_lower(int var, double lo);
    void set_upper(int var, double ub);
    double lower(int var) const { return lp_.lower[var]; }
    double upper(int var) const { return lp_.upper[var]; }

    /// Debug dump in LP interchange format.
    std::string dump_lp() const;

    long long iterations() const { return total_iterations_; }

private:
    // internal variable order: slacks [0, m), structurals [m, m + ncols)
    int internal(int var) const { return m_ + var; }

    double bound_lo(int v) const { return lo_[v]; }
    double bound_hi(int v) const { return hi_[v]; }
    double nonbasic_value(int v) const;
    void compute_basic_values();
    bool refactorize();
    void reset_basis_to_slacks();
    std::vector<double> btran(const std::vector<double>& costs) const; // y = c_B Binv
    std::vector<double> ftran(int v) const;                            // d = Binv A_v
    double col_dot(int v, const std::vector<double>& y) const;
    // One simplex phase; phase1 minimizes bound violations of basic vars.
    // Returns true normally, false on iteration limit.
    bool run_phase(bool phase1, const std::vector<double>& costs);
    bool basics_feasible(double tol) const;

    LpProblem lp_; // structural part, kept for dumps and bound edits
    int m_ = 0;    // rows
    int nvars_ = 0;

    std::vector<double> lo_, hi_, cost_;                    // per internal var
    std::vector<std::vector<std::pair<int, double>>> acol_; // internal columns
    enum class VarState : char { Basic, AtLower, AtUpper };
    std::vector<VarState> state_;
    std::vector<int> basic_;      // basic variable per row
    std::vector<double> xb_;      // basic values
    std::vector<double> binv_;    // dense m x m row-major inverse of the basis
    long long total_iterations_ = 0;
    bool unbounded_ = false;
    bool limit_hit_ = false;
};

/// Convenience one-shot solve.
LpSolution solve_lp(const LpProblem& problem);

} // namespace bpps

#endif
