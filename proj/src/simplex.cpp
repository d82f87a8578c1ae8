#include "hardy/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hardy/error.hpp"

namespace hardy::lp {

namespace {

constexpr double kPivotTol = 1e-12;
constexpr double kCostTol = 1e-12;

// Tableau rows 0..m-1 are constraints, row m is the objective (reduced
// costs); the last column is the right-hand side.
class Tableau {
public:
    Tableau(std::size_t m, std::size_t n) : m_(m), n_(n), t_((m + 1) * (n + 1), 0.0), basis_(m) {}

    double& at(std::size_t r, std::size_t c) { return t_[r * (n_ + 1) + c]; }
    double& rhs(std::size_t r) { return at(r, n_); }
    std::size_t& basis(std::size_t r) { return basis_[r]; }
    [[nodiscard]] std::size_t rows() const { return m_; }
    [[nodiscard]] std::size_t cols() const { return n_; }

    void pivot(std::size_t pr, std::size_t pc) {
        const double inv = 1.0 / at(pr, pc);
        for (std::size_t c = 0; c <= n_; ++c) {
            at(pr, c) *= inv;
        }
        for (std::size_t r = 0; r <= m_; ++r) {
            if (r == pr) {
                continue;
            }
            const double f = at(r, pc);
            if (f == 0.0) {
                continue;
            }
            for (std::size_t c = 0; c <= n_; ++c) {
                at(r, c) -= f * at(pr, c);
            }
            at(r, pc) = 0.0;
        }
        basis_[pr] = pc;
    }

    // Runs simplex iterations on columns [0, allowed). Returns false when
    // the objective is unbounded below.
    bool optimize(std::size_t allowed) {
        const std::size_t max_iter = 50 * (m_ + n_) + 1000;
        for (std::size_t iter = 0; iter < max_iter; ++iter) {
            std::size_t enter = allowed;
            for (std::size_t c = 0; c < allowed; ++c) {
                if (at(m_, c) < -kCostTol) {
                    enter = c;
                    break;
                }
            }
            if (enter == allowed) {
                return true;
            }
            std::size_t leave = m_;
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t r = 0; r < m_; ++r) {
                const double coef = at(r, enter);
                if (coef > kPivotTol) {
                    const double ratio = rhs(r) / coef;
                    if (ratio < best - 1e-15 ||
                        (std::abs(ratio - best) <= 1e-15 && leave < m_ && basis_[r] < basis_[leave])) {
                        best = ratio;
                        leave = r;
                    }
                }
            }
            if (leave == m_) {
                return false;
            }
            pivot(leave, enter);
        }
        throw Error(ErrorKind::InternalConsistency, "simplex iteration limit reached");
    }

private:
    std::size_t m_, n_;
    std::vector<double> t_;
    std::vector<std::size_t> basis_;
};

}  // namespace

Solution solve(const StandardFormLp& problem) {
    const std::size_t m = problem.rows;
    const std::size_t n = problem.cols;
    if (problem.a.size() != m * n || problem.b.size() != m || problem.c.size() != n) {
        throw Error(ErrorKind::DimensionMismatch, "linear program arrays have inconsistent sizes");
    }

    // Columns: n structural, then m artificials.
    Tableau t(m, n + m);
    double b_scale = 1.0;
    for (std::size_t r = 0; r < m; ++r) {
        const double sign = problem.b[r] < 0.0 ? -1.0 : 1.0;
        for (std::size_t c = 0; c < n; ++c) {
            t.at(r, c) = sign * problem.a[r * n + c];
        }
        t.at(r, n + r) = 1.0;
        t.rhs(r) = sign * problem.b[r];
        t.basis(r) = n + r;
        b_scale = std::max(b_scale, std::abs(problem.b[r]));
    }

    // Phase 1: minimise the sum of artificials; reduced costs are -sum of rows.
    for (std::size_t c = 0; c <= n + m; ++c) {
        double s = 0.0;
        for (std::size_t r = 0; r < m; ++r) {
            s += t.at(r, c);
        }
        t.at(m, c) = (c >= n && c < n + m) ? 0.0 : -s;
    }
    t.optimize(n + m);
    if (-t.rhs(m) > 1e-9 * b_scale) {
        return Solution{Status::Infeasible, {}, 0.0};
    }

    // Drive remaining (zero-level) artificials out of the basis.
    for (std::size_t r = 0; r < m; ++r) {
        if (t.basis(r) < n) {
            continue;
        }
        for (std::size_t c = 0; c < n; ++c) {
            if (std::abs(t.at(r, c)) > kPivotTol) {
                t.pivot(r, c);
                break;
            }
        }
        // A row with no structural entry is redundant; its artificial stays
        // basic at zero and is excluded from phase 2 entering choices.
    }

    // Phase 2 objective.
    for (std::size_t c = 0; c <= n + m; ++c) {
        t.at(m, c) = c < n ? problem.c[c] : 0.0;
    }
    for (std::size_t r = 0; r < m; ++r) {
        const std::size_t bc = t.basis(r);
        const double cost = bc < n ? problem.c[bc] : 0.0;
        if (cost != 0.0) {
            for (std::size_t c = 0; c <= n + m; ++c) {
                t.at(m, c) -= cost * t.at(r, c);
            }
        }
    }
    if (!t.optimize(n)) {
        return Solution{Status::Unbounded, {}, 0.0};
    }

    Solution sol{Status::Optimal, std::vector<double>(n, 0.0), 0.0};
    for (std::size_t r = 0; r < m; ++r) {
        if (t.basis(r) < n) {
            sol.x[t.basis(r)] = std::max(0.0, t.rhs(r));
        }
    }
    for (std::size_t c = 0; c < n; ++c) {
        sol.objective += problem.c[c] * sol.x[c];
    }
    return sol;
}

}  // namespace hardy::lp
