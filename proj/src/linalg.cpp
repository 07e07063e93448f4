#include "critdeg/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace critdeg {

IntMat IntMat::from_rows(const std::vector<IntVec>& rows_in) {
    IntMat m(static_cast<int>(rows_in.size()), rows_in.empty() ? 0 : static_cast<int>(rows_in[0].size()));
    for (int i = 0; i < m.rows; ++i) {
        if (static_cast<int>(rows_in[i].size()) != m.cols)
            throw std::invalid_argument("ragged rows in IntMat::from_rows");
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows_in[i][j];
    }
    return m;
}

IntVec IntMat::row(int i) const {
    IntVec r(cols);
    for (int j = 0; j < cols; ++j) r[j] = at(i, j);
    return r;
}

int rank_int(const IntMat& m) {
    const int r = m.rows, c = m.cols;
    std::vector<Wide> w(m.a.begin(), m.a.end());
    auto at = [&](int i, int j) -> Wide& { return w[static_cast<std::size_t>(i) * c + j]; };

    int rank = 0;
    Wide prev = 1;
    for (int col = 0; col < c && rank < r; ++col) {
        int pivot = -1;
        for (int i = rank; i < r; ++i)
            if (at(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < c; ++j) std::swap(at(pivot, j), at(rank, j));
        const Wide p = at(rank, col);
        for (int i = rank + 1; i < r; ++i) {
            const Wide f = at(i, col);
            for (int j = 0; j < c; ++j)
                at(i, j) = (at(i, j) * p - f * at(rank, j)) / prev;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

namespace {

// Unimodular column reduction: transforms `work` to column echelon form while
// mirroring every column operation on `u` (initially the identity).  After the
// sweep, columns of u whose images under the original matrix are zero span the
// integer kernel.
struct ColumnReduction {
    IntMat work;
    IntMat u;
    std::vector<std::pair<int, int>> pivots;  // (row, col) in increasing row order

    explicit ColumnReduction(const IntMat& a) : work(a), u(a.cols, a.cols) {
        for (int j = 0; j < a.cols; ++j) u.at(j, j) = 1;
        run();
    }

    void col_axpy(int dst, int src, Int q) {  // col_dst -= q * col_src
        for (int i = 0; i < work.rows; ++i)
            work.at(i, dst) = checked_int(Wide(work.at(i, dst)) - Wide(q) * Wide(work.at(i, src)), "column reduction");
        for (int i = 0; i < u.rows; ++i)
            u.at(i, dst) = checked_int(Wide(u.at(i, dst)) - Wide(q) * Wide(u.at(i, src)), "column reduction");
    }

    void col_swap(int x, int y) {
        if (x == y) return;
        for (int i = 0; i < work.rows; ++i) std::swap(work.at(i, x), work.at(i, y));
        for (int i = 0; i < u.rows; ++i) std::swap(u.at(i, x), u.at(i, y));
    }

    void col_negate(int x) {
        for (int i = 0; i < work.rows; ++i) work.at(i, x) = -work.at(i, x);
        for (int i = 0; i < u.rows; ++i) u.at(i, x) = -u.at(i, x);
    }

    void run() {
        int next = 0;  // first unprocessed column
        for (int row = 0; row < work.rows && next < work.cols; ++row) {
            // Euclidean reduction among active columns until at most one has a
            // nonzero entry in this row.
            while (true) {
                int best = -1;
                for (int j = next; j < work.cols; ++j)
                    if (work.at(row, j) != 0 &&
                        (best < 0 || std::abs(work.at(row, j)) < std::abs(work.at(row, best))))
                        best = j;
                if (best < 0) break;
                bool reduced_any = false;
                for (int j = next; j < work.cols; ++j) {
                    if (j == best || work.at(row, j) == 0) continue;
                    const Int q = work.at(row, j) / work.at(row, best);
                    col_axpy(j, best, q);
                    reduced_any = true;
                }
                if (!reduced_any) {
                    col_swap(next, best);
                    if (work.at(row, next) < 0) col_negate(next);
                    pivots.emplace_back(row, next);
                    ++next;
                    break;
                }
            }
        }
    }
};

}  // namespace

std::vector<IntVec> integer_kernel(const IntMat& a) {
    ColumnReduction red(a);
    const int first_free = red.pivots.empty() ? 0 : (red.pivots.back().second + 1);
    std::vector<IntVec> basis;
    for (int j = first_free; j < a.cols; ++j) {
        IntVec v(a.cols);
        bool nonzero = false;
        for (int i = 0; i < a.cols; ++i) {
            v[i] = red.u.at(i, j);
            nonzero |= (v[i] != 0);
        }
        if (!nonzero) continue;
        v = primitive_vector(std::move(v));
        // fix sign: first nonzero entry positive
        for (Int x : v) {
            if (x == 0) continue;
            if (x < 0)
                for (auto& e : v) e = -e;
            break;
        }
        basis.push_back(std::move(v));
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& b) {
    if (static_cast<int>(b.size()) != a.rows)
        throw std::invalid_argument("solve_integer: rhs size mismatch");
    ColumnReduction red(a);
    std::vector<Wide> residual(b.begin(), b.end());
    IntVec z(a.cols, 0);
    for (auto [row, col] : red.pivots) {
        // rows above this pivot's row have zero entries in column `col`
        const Wide num = residual[row];
        const Wide den = red.work.at(row, col);
        if (num % den != 0) return std::nullopt;
        const Wide q = num / den;
        z[col] = checked_int(q, "solve_integer");
        for (int i = 0; i < a.rows; ++i) residual[i] -= q * Wide(red.work.at(i, col));
    }
    for (Wide r : residual)
        if (r != 0) return std::nullopt;
    IntVec x(a.cols, 0);
    for (int i = 0; i < a.cols; ++i) {
        Wide s = 0;
        for (int j = 0; j < a.cols; ++j) s += Wide(red.u.at(i, j)) * Wide(z[j]);
        x[i] = checked_int(s, "solve_integer");
    }
    return x;
}

IntVec primitive_vector(IntVec v) {
    Int g = 0;
    for (Int x : v) g = gcd_int(g, x);
    if (g > 1)
        for (Int& x : v) x /= g;
    return v;
}

}  // namespace critdeg
