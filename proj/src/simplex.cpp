#include "critdeg/simplex.hpp"

#include <stdexcept>

namespace critdeg {

namespace {

class Tableau {
public:
    // rows: m constraints (A v = b with b >= 0 after sign flips), plus
    // objective row kept separately.  Columns: n structural + m artificial.
    Tableau(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b)
        : m_(static_cast<int>(a.size())),
          n_(m_ ? static_cast<int>(a[0].size()) : 0),
          cols_(n_ + m_) {
        for (int i = 0; i < m_; ++i)
            if (sgn(b[i]) < 0) {
                for (auto& x : a[i]) x = -x;
                b[i] = -b[i];
            }
        t_.assign(m_, std::vector<mpq_class>(cols_ + 1, 0));
        basis_.resize(m_);
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j < n_; ++j) t_[i][j] = a[i][j];
            t_[i][n_ + i] = 1;
            t_[i][cols_] = b[i];
            basis_[i] = n_ + i;
        }
    }

    // Maximizes the objective with coefficients obj (size = total columns) via
    // Bland's rule; allowed marks columns eligible to enter.
    void optimize(const std::vector<mpq_class>& obj, const std::vector<bool>& allowed) {
        const int total = cols_;
        while (true) {
            // reduced costs: z_j - c_j with respect to current basis
            int enter = -1;
            for (int j = 0; j < total; ++j) {
                if (!allowed[j]) continue;
                bool basic = false;
                for (int i = 0; i < m_; ++i) basic |= (basis_[i] == j);
                if (basic) continue;
                mpq_class red = obj[j];
                for (int i = 0; i < m_; ++i)
                    if (sgn(t_[i][j]) != 0) red -= obj[basis_[i]] * t_[i][j];
                if (sgn(red) > 0) { enter = j; break; }  // Bland: first improving index
            }
            if (enter < 0) return;
            int leave = -1;
            mpq_class best_ratio;
            for (int i = 0; i < m_; ++i) {
                if (sgn(t_[i][enter]) <= 0) continue;
                mpq_class ratio = t_[i][cols_] / t_[i][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) throw std::runtime_error("simplex: unbounded objective");
            pivot(leave, enter);
        }
    }

    void pivot(int row, int col) {
        const mpq_class p = t_[row][col];
        for (auto& x : t_[row]) x /= p;
        for (int i = 0; i < m_; ++i) {
            if (i == row || sgn(t_[i][col]) == 0) continue;
            const mpq_class f = t_[i][col];
            for (std::size_t j = 0; j < t_[i].size(); ++j) t_[i][j] -= f * t_[row][j];
        }
        basis_[row] = col;
    }

    mpq_class objective_value(const std::vector<mpq_class>& obj) const {
        mpq_class v = 0;
        for (int i = 0; i < m_; ++i) v += obj[basis_[i]] * t_[i][cols_];
        return v;
    }

    // After a feasible phase 1, basic artificials sit at value zero; pivot
    // them out on any structural column, or drop the row when it is redundant.
    // Otherwise phase-2 pivots could silently push an artificial positive.
    void eliminate_artificials() {
        for (int i = m_ - 1; i >= 0; --i) {
            if (basis_[i] < n_) continue;
            int col = -1;
            for (int j = 0; j < n_; ++j)
                if (sgn(t_[i][j]) != 0) { col = j; break; }
            if (col >= 0) {
                pivot(i, col);
            } else {
                t_.erase(t_.begin() + i);
                basis_.erase(basis_.begin() + i);
                --m_;
            }
        }
    }

    std::vector<mpq_class> structural_solution() const {
        std::vector<mpq_class> v(n_, 0);
        for (int i = 0; i < m_; ++i)
            if (basis_[i] < n_) v[basis_[i]] = t_[i][cols_];
        return v;
    }

    int n() const { return n_; }
    int artificials() const { return cols_ - n_; }

private:
    int m_, n_, cols_;
    std::vector<std::vector<mpq_class>> t_;
    std::vector<int> basis_;
};

}  // namespace

LpResult simplex_solve(const std::vector<std::vector<mpq_class>>& a,
                       const std::vector<mpq_class>& b,
                       const std::vector<mpq_class>& c) {
    LpResult res;
    Tableau tab(a, b);
    const int n = tab.n(), m = tab.artificials();

    std::vector<mpq_class> phase1(n + m, 0);
    for (int j = n; j < n + m; ++j) phase1[j] = -1;  // maximize -(sum of artificials)
    std::vector<bool> all_cols(n + m, true);
    tab.optimize(phase1, all_cols);
    if (sgn(tab.objective_value(phase1)) != 0) return res;  // infeasible
    tab.eliminate_artificials();

    std::vector<mpq_class> phase2(n + m, 0);
    for (int j = 0; j < n; ++j) phase2[j] = c[j];
    std::vector<bool> structural_only(n + m, false);
    for (int j = 0; j < n; ++j) structural_only[j] = true;
    tab.optimize(phase2, structural_only);

    res.feasible = true;
    res.objective = tab.objective_value(phase2);
    res.solution = tab.structural_solution();
    return res;
}

namespace {

// Constraint block for "x is a convex combination of points": one row per
// coordinate plus the weight-sum row.
void convex_rows(const IntVec& x, const std::vector<IntVec>& points, int extra_cols,
                 std::vector<std::vector<mpq_class>>& a, std::vector<mpq_class>& b) {
    const int d = static_cast<int>(x.size());
    const int k = static_cast<int>(points.size());
    a.assign(d + 1, std::vector<mpq_class>(k + extra_cols, 0));
    b.assign(d + 1, 0);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < k; ++j) a[i][j] = static_cast<long>(points[j][i]);
        b[i] = static_cast<long>(x[i]);
    }
    for (int j = 0; j < k; ++j) a[d][j] = 1;
    b[d] = 1;
}

}  // namespace

bool point_in_hull(const IntVec& x, const std::vector<IntVec>& points) {
    if (points.empty()) return false;
    std::vector<std::vector<mpq_class>> a;
    std::vector<mpq_class> b;
    convex_rows(x, points, 0, a, b);
    std::vector<mpq_class> c(points.size(), 0);
    return simplex_solve(a, b, c).feasible;
}

bool point_in_relative_interior(const IntVec& x, const std::vector<IntVec>& points) {
    if (points.empty()) return false;
    const int k = static_cast<int>(points.size());
    // lambda_j = t + s_j with slack s_j >= 0; maximize t.  x is in the relative
    // interior iff the optimum is strictly positive.
    std::vector<std::vector<mpq_class>> a;
    std::vector<mpq_class> b;
    convex_rows(x, points, 0, a, b);
    const int d = static_cast<int>(x.size());
    std::vector<std::vector<mpq_class>> a2(d + 1, std::vector<mpq_class>(k + 1, 0));
    for (int i = 0; i <= d; ++i) {
        for (int j = 0; j < k; ++j) a2[i][j] = a[i][j];
        for (int j = 0; j < k; ++j) a2[i][k] += a[i][j];  // column for t
    }
    std::vector<mpq_class> c(k + 1, 0);
    c[k] = 1;
    LpResult r = simplex_solve(a2, b, c);
    return r.feasible && sgn(r.objective) > 0;
}

}  // namespace critdeg
