#include "bpps/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>

namespace bpps {

namespace {
constexpr double kTolFeas = 1e-7;
constexpr double kTolDual = 1e-7;
constexpr double kTolPivot = 1e-9;
constexpr long long kMaxIterations = 200000;
constexpr int kRefactorEvery = 100;
constexpr int kStallBeforeBland = 200;
} // namespace

int LpProblem::add_row(RowSense s, double b) {
    sense.push_back(s);
    rhs.push_back(b);
    return num_rows++;
}

int LpProblem::add_column(double c, std::vector<std::pair<int, double>> entries, double lo,
                          double hi) {
    obj.push_back(c);
    lower.push_back(lo);
    upper.push_back(hi);
    cols.push_back(std::move(entries));
    return num_cols() - 1;
}

SimplexSolver::SimplexSolver(LpProblem problem) : lp_(std::move(problem)), m_(lp_.num_rows) {
    nvars_ = m_ + lp_.num_cols();
    lo_.resize(nvars_);
    hi_.resize(nvars_);
    cost_.assign(nvars_, 0.0);
    acol_.resize(nvars_);
    state_.assign(nvars_, VarState::AtLower);
    for (int i = 0; i < m_; ++i) {
        switch (lp_.sense[i]) {
            case RowSense::Le: lo_[i] = 0.0; hi_[i] = kInf; break;
            case RowSense::Ge: lo_[i] = -kInf; hi_[i] = 0.0; break;
            case RowSense::Eq: lo_[i] = 0.0; hi_[i] = 0.0; break;
        }
        acol_[i] = {{i, 1.0}};
    }
    for (int j = 0; j < lp_.num_cols(); ++j) {
        const int v = internal(j);
        lo_[v] = lp_.lower[j];
        hi_[v] = lp_.upper[j];
        cost_[v] = lp_.obj[j];
        acol_[v] = lp_.cols[j];
    }
    for (int v = 0; v < nvars_; ++v)
        state_[v] = std::isfinite(lo_[v]) || !std::isfinite(hi_[v]) ? VarState::AtLower
                                                                    : VarState::AtUpper;
    reset_basis_to_slacks();
}

int SimplexSolver::add_column(double c, std::vector<std::pair<int, double>> entries, double lo,
                              double hi) {
    const int j = lp_.add_column(c, entries, lo, hi);
    const int v = internal(j);
    lo_.push_back(lo);
    hi_.push_back(hi);
    cost_.push_back(c);
    acol_.push_back(lp_.cols[j]);
    state_.push_back(std::isfinite(lo) || !std::isfinite(hi) ? VarState::AtLower
                                                             : VarState::AtUpper);
    ++nvars_;
    return j;
}

void SimplexSolver::set_lower(int var, double lo) {
    if (lo > lp_.upper[var] + kTolFeas) throw std::invalid_argument("bound inversion");
    lp_.lower[var] = lo;
    lo_[internal(var)] = lo;
}

void SimplexSolver::set_upper(int var, double ub) {
    if (ub < lp_.lower[var] - kTolFeas) throw std::invalid_argument("bound inversion");
    lp_.upper[var] = ub;
    hi_[internal(var)] = ub;
}

double SimplexSolver::nonbasic_value(int v) const {
    if (state_[v] == VarState::AtUpper) return hi_[v];
    return std::isfinite(lo_[v]) ? lo_[v] : 0.0;
}

void SimplexSolver::reset_basis_to_slacks() {
    basic_.resize(m_);
    for (int i = 0; i < m_; ++i) basic_[i] = i;
    for (int v = 0; v < nvars_; ++v)
        if (state_[v] == VarState::Basic)
            state_[v] = std::isfinite(lo_[v]) || !std::isfinite(hi_[v]) ? VarState::AtLower
                                                                        : VarState::AtUpper;
    for (int i = 0; i < m_; ++i) state_[i] = VarState::Basic;
    binv_.assign(static_cast<std::size_t>(m_) * m_, 0.0);
    for (int i = 0; i < m_; ++i) binv_[static_cast<std::size_t>(i) * m_ + i] = 1.0;
    compute_basic_values();
}

bool SimplexSolver::refactorize() {
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(m_, m_);
    for (int i = 0; i < m_; ++i)
        for (auto [r, a] : acol_[basic_[i]]) b(r, i) = a;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(b);
    if (!lu.isInvertible()) return false;
    Eigen::MatrixXd inv = lu.inverse();
    // binv_ maps rows of the system: x_B = Binv (b - N x_N); note basis
    // columns are stored per basic position, so invert column-assembled B.
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) binv_[static_cast<std::size_t>(i) * m_ + j] = inv(i, j);
    compute_basic_values();
    return true;
}

void SimplexSolver::compute_basic_values() {
    std::vector<double> r(m_);
    for (int i = 0; i < m_; ++i) r[i] = lp_.rhs[i];
    for (int v = 0; v < nvars_; ++v) {
        if (state_[v] == VarState::Basic) continue;
        const double xv = nonbasic_value(v);
        if (xv == 0.0) continue;
        for (auto [row, a] : acol_[v]) r[row] -= a * xv;
    }
    xb_.assign(m_, 0.0);
    for (int i = 0; i < m_; ++i) {
        const double* row = &binv_[static_cast<std::size_t>(i) * m_];
        double s = 0.0;
        for (int j = 0; j < m_; ++j) s += row[j] * r[j];
        xb_[i] = s;
    }
}

std::vector<double> SimplexSolver::btran(const std::vector<double>& cb) const {
    std::vector<double> y(m_, 0.0);
    for (int i = 0; i < m_; ++i) {
        if (cb[i] == 0.0) continue;
        const double* row = &binv_[static_cast<std::size_t>(i) * m_];
        for (int j = 0; j < m_; ++j) y[j] += cb[i] * row[j];
    }
    return y;
}

std::vector<double> SimplexSolver::ftran(int v) const {
    std::vector<double> d(m_, 0.0);
    for (auto [row, a] : acol_[v])
        for (int i = 0; i < m_; ++i) d[i] += binv_[static_cast<std::size_t>(i) * m_ + row] * a;
    return d;
}

double SimplexSolver::col_dot(int v, const std::vector<double>& y) const {
    double s = 0.0;
    for (auto [row, a] : acol_[v]) s += y[row] * a;
    return s;
}

bool SimplexSolver::basics_feasible(double tol) const {
    for (int i = 0; i < m_; ++i) {
        const int v = basic_[i];
        if (xb_[i] < lo_[v] - tol || xb_[i] > hi_[v] + tol) return false;
    }
    return true;
}

bool SimplexSolver::run_phase(bool phase1, const std::vector<double>& costs) {
    int stall = 0;
    int since_refactor = 0;
    bool bland = false;
    while (true) {
        if (++total_iterations_ > kMaxIterations) {
            limit_hit_ = true;
            return false;
        }
        std::vector<double> cb(m_, 0.0);
        if (phase1) {
            bool any = false;
            for (int i = 0; i < m_; ++i) {
                const int v = basic_[i];
                if (xb_[i] > hi_[v] + kTolFeas) {
                    cb[i] = 1.0;
                    any = true;
                } else if (xb_[i] < lo_[v] - kTolFeas) {
                    cb[i] = -1.0;
                    any = true;
                }
            }
            if (!any) return true; // primal feasible
        } else {
            for (int i = 0; i < m_; ++i) cb[i] = costs[basic_[i]];
        }
        const auto y = btran(cb);

        // entering variable
        int enter = -1;
        int dir = 0;
        double best_score = kTolDual;
        for (int v = 0; v < nvars_; ++v) {
            if (state_[v] == VarState::Basic) continue;
            if (lo_[v] == hi_[v]) continue; // fixed
            const double rc = (phase1 ? 0.0 : costs[v]) - col_dot(v, y);
            const bool free_var = !std::isfinite(lo_[v]) && !std::isfinite(hi_[v]);
            int d = 0;
            if (state_[v] == VarState::AtLower && rc < -best_score) d = +1;
            else if (state_[v] == VarState::AtUpper && rc > best_score) d = -1;
            else if (free_var && rc > best_score) d = -1;
            if (d == 0) continue;
            if (bland) {
                enter = v;
                dir = d;
                break;
            }
            enter = v;
            dir = d;
            best_score = std::abs(rc);
        }
        if (enter < 0) return true; // phase optimum

        const auto d = ftran(enter);

        // ratio test
        double t_limit = kInf;
        if (std::isfinite(lo_[enter]) && std::isfinite(hi_[enter]))
            t_limit = hi_[enter] - lo_[enter];
        double t_best = t_limit;
        int leave = -1;      // basic position
        double leave_to = 0; // bound the leaving variable lands on
        for (int i = 0; i < m_; ++i) {
            if (std::abs(d[i]) < kTolPivot) continue;
            const int v = basic_[i];
            const double delta = -dir * d[i];
            double target;
            if (phase1 && xb_[i] < lo_[v] - kTolFeas) {
                if (delta <= 0) continue; // moving further below, no block
                target = lo_[v];
            } else if (phase1 && xb_[i] > hi_[v] + kTolFeas) {
                if (delta >= 0) continue;
                target = hi_[v];
            } else if (delta > 0) {
                if (!std::isfinite(hi_[v])) continue;
                target = hi_[v];
            } else {
                if (!std::isfinite(lo_[v])) continue;
                target = lo_[v];
            }
            double t = (target - xb_[i]) / delta;
            if (t < 0) t = 0; // tolerance residue
            if (t < t_best - 1e-12 || (t < t_best + 1e-12 && (leave < 0 || v < basic_[leave]))) {
                t_best = t;
                leave = i;
                leave_to = target;
            }
        }

        if (!std::isfinite(t_best)) {
            if (phase1) { // numerically stuck; rebuild and retry once per stall
                if (!refactorize()) reset_basis_to_slacks();
                if (++stall > m_ + 10) {
                    limit_hit_ = true;
                    return false;
                }
                continue;
            }
            unbounded_ = true;
            return true;
        }

        if (t_best <= kTolPivot) {
            if (++stall > kStallBeforeBland) bland = true;
        } else {
            stall = 0;
            bland = false;
        }

        if (leave < 0 || (t_limit < kInf && t_limit <= t_best)) {
            // bound flip of the entering variable
            for (int i = 0; i < m_; ++i) xb_[i] += -dir * t_limit * d[i];
            state_[enter] =
                state_[enter] == VarState::AtLower ? VarState::AtUpper : VarState::AtLower;
            continue;
        }

        // pivot: entering replaces basic_[leave]
        const double enter_val = nonbasic_value(enter) + dir * t_best;
        for (int i = 0; i < m_; ++i) xb_[i] += -dir * t_best * d[i];
        const int leaving_var = basic_[leave];
        state_[leaving_var] =
            std::abs(leave_to - hi_[leaving_var]) < std::abs(leave_to - lo_[leaving_var])
                ? VarState::AtUpper
                : VarState::AtLower;
        basic_[leave] = enter;
        state_[enter] = VarState::Basic;
        xb_[leave] = enter_val;

        // eta update of the inverse
        const double piv = d[leave];
        double* prow = &binv_[static_cast<std::size_t>(leave) * m_];
        for (int j = 0; j < m_; ++j) prow[j] /= piv;
        for (int i = 0; i < m_; ++i) {
            if (i == leave || std::abs(d[i]) < 1e-14) continue;
            double* row = &binv_[static_cast<std::size_t>(i) * m_];
            const double f = d[i];
            for (int j = 0; j < m_; ++j) row[j] -= f * prow[j];
        }

        if (++since_refactor >= kRefactorEvery) {
            since_refactor = 0;
            if (!refactorize()) reset_basis_to_slacks();
        }
    }
}

LpSolution SimplexSolver::solve() {
    unbounded_ = false;
    limit_hit_ = false;

    // normalize nonbasic states against current bounds
    for (int v = 0; v < nvars_; ++v) {
        if (state_[v] == VarState::Basic) continue;
        if (state_[v] == VarState::AtUpper && !std::isfinite(hi_[v]))
            state_[v] = VarState::AtLower;
        if (state_[v] == VarState::AtLower && !std::isfinite(lo_[v]) && std::isfinite(hi_[v]))
            state_[v] = VarState::AtUpper;
    }
    if (!refactorize()) reset_basis_to_slacks();

    LpSolution out;
    bool feasible = false;
    if (run_phase(true, {})) {
        feasible = basics_feasible(10 * kTolFeas);
        if (!feasible) {
            out.status = LpStatus::Infeasible;
        }
    }
    if (limit_hit_) {
        out.status = LpStatus::IterationLimit;
    } else if (feasible) {
        std::vector<double> costs(nvars_, 0.0);
        for (int j = 0; j < lp_.num_cols(); ++j) costs[internal(j)] = lp_.obj[j];
        if (!run_phase(false, costs)) {
            out.status = LpStatus::IterationLimit;
        } else if (unbounded_) {
            out.status = LpStatus::Unbounded;
        } else {
            out.status = LpStatus::Optimal;
        }
        std::vector<double> cb(m_);
        for (int i = 0; i < m_; ++i) cb[i] = costs[basic_[i]];
        out.y = btran(cb);
    }

    out.x.assign(lp_.num_cols(), 0.0);
    for (int j = 0; j < lp_.num_cols(); ++j) {
        const int v = internal(j);
        out.x[j] = state_[v] == VarState::Basic ? 0.0 : nonbasic_value(v);
    }
    for (int i = 0; i < m_; ++i)
        if (basic_[i] >= m_) out.x[basic_[i] - m_] = xb_[i];
    out.objective = 0.0;
    for (int j = 0; j < lp_.num_cols(); ++j) out.objective += lp_.obj[j] * out.x[j];
    if (out.y.empty()) out.y.assign(m_, 0.0);
    return out;
}

std::string SimplexSolver::dump_lp() const {
    std::ostringstream os;
    os << "Minimize\n obj:";
    for (int j = 0; j < lp_.num_cols(); ++j)
        if (lp_.obj[j] != 0.0) os << " + " << lp_.obj[j] << " x" << j;
    os << "\nSubject To\n";
    std::vector<std::vector<std::pair<int, double>>> rows(m_);
    for (int j = 0; j < lp_.num_cols(); ++j)
        for (auto [r, a] : lp_.cols[j]) rows[r].push_back({j, a});
    for (int i = 0; i < m_; ++i) {
        os << " r" << i << ":";
        for (auto [j, a] : rows[i]) os << " + " << a << " x" << j;
        os << (lp_.sense[i] == RowSense::Le ? " <= " : lp_.sense[i] == RowSense::Ge ? " >= " : " = ")
           << lp_.rhs[i] << "\n";
    }
    os << "Bounds\n";
    for (int j = 0; j < lp_.num_cols(); ++j)
        os << " " << lp_.lower[j] << " <= x" << j << " <= " << lp_.upper[j] << "\n";
    os << "End\n";
    return os.str();
}

LpSolution solve_lp(const LpProblem& problem) { return SimplexSolver(problem).solve(); }

} // namespace bpps
