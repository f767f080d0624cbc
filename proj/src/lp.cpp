#include "fptkit/lp.hpp"

#include "fptkit/errors.hpp"

#include <algorithm>

namespace fptkit {

namespace {

// Dense tableau: rows of [A | b], basis index per row, cost row maintained
// separately via reduced-cost computation against the current basis.
struct Tableau {
    QMat A;                    // m x n
    QVec b;                    // m
    std::vector<size_t> basis; // m, column index basic in each row

    void pivot(size_t row, size_t col) {
        Rat inv = 1 / A[row][col];
        for (auto& x : A[row]) x *= inv;
        b[row] *= inv;
        for (size_t r = 0; r < A.size(); ++r) {
            if (r == row || A[r][col] == 0) continue;
            Rat f = A[r][col];
            for (size_t c = 0; c < A[r].size(); ++c) A[r][c] -= f * A[row][c];
            b[r] -= f * b[row];
        }
        basis[row] = col;
    }

    // Bland's rule: entering = smallest column with negative reduced cost;
    // leaving = smallest ratio, ties by smallest basic column index.
    LPStatus optimize(const QVec& cost, size_t ncols) {
        while (true) {
            QVec y(A.size(), Rat(0));
            for (size_t r = 0; r < A.size(); ++r) y[r] = cost[basis[r]];
            size_t enter = ncols;
            for (size_t c = 0; c < ncols; ++c) {
                Rat red = cost[c];
                for (size_t r = 0; r < A.size(); ++r)
                    if (y[r] != 0) red -= y[r] * A[r][c];
                if (red < 0) {
                    enter = c;
                    break;
                }
            }
            if (enter == ncols) return LPStatus::Optimal;
            size_t leave = A.size();
            Rat best = 0;
            for (size_t r = 0; r < A.size(); ++r) {
                if (A[r][enter] <= 0) continue;
                Rat ratio = b[r] / A[r][enter];
                if (leave == A.size() || ratio < best ||
                    (ratio == best && basis[r] < basis[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave == A.size()) return LPStatus::Unbounded;
            pivot(leave, enter);
        }
    }
};

} // namespace

LPResult lp_solve(const QMat& A_in, const QVec& b_in, const QVec& c) {
    size_t m = A_in.size();
    size_t n = m ? A_in[0].size() : c.size();
    if (c.size() != n) throw DomainError("cost vector length mismatch");

    Tableau T;
    T.A.assign(m, QVec(n + m, Rat(0)));
    T.b = b_in;
    T.basis.resize(m);
    for (size_t r = 0; r < m; ++r) {
        bool flip = b_in[r] < 0;
        for (size_t cidx = 0; cidx < n; ++cidx)
            T.A[r][cidx] = flip ? -A_in[r][cidx] : A_in[r][cidx];
        if (flip) T.b[r] = -b_in[r];
        T.A[r][n + r] = 1;
        T.basis[r] = n + r;
    }

    // Phase 1: minimize the sum of artificials.
    QVec phase1(n + m, Rat(0));
    for (size_t r = 0; r < m; ++r) phase1[n + r] = 1;
    LPStatus st = T.optimize(phase1, n + m);
    if (st != LPStatus::Optimal) throw DomainError("phase 1 cannot be unbounded");
    Rat w = 0;
    for (size_t r = 0; r < m; ++r)
        if (T.basis[r] >= n) w += T.b[r];
    if (w > 0) return {LPStatus::Infeasible, Rat(0), {}};

    // Drive remaining artificials out of the basis; drop redundant rows.
    for (size_t r = 0; r < T.A.size();) {
        if (T.basis[r] < n) {
            ++r;
            continue;
        }
        size_t col = n;
        for (size_t cidx = 0; cidx < n; ++cidx)
            if (T.A[r][cidx] != 0) {
                col = cidx;
                break;
            }
        if (col < n) {
            T.pivot(r, col);
            ++r;
        } else {
            T.A.erase(T.A.begin() + r);
            T.b.erase(T.b.begin() + r);
            T.basis.erase(T.basis.begin() + r);
        }
    }
    for (auto& row : T.A) row.resize(n);

    QVec cost = c;
    st = T.optimize(cost, n);
    if (st == LPStatus::Unbounded) return {LPStatus::Unbounded, Rat(0), {}};
    QVec x(n, Rat(0));
    for (size_t r = 0; r < T.A.size(); ++r) x[T.basis[r]] = T.b[r];
    return {LPStatus::Optimal, q_dot(c, x), x};
}

bool lp_feasible(const QMat& A, const QVec& b) {
    size_t n = A.empty() ? 0 : A[0].size();
    QVec c(n, Rat(0));
    return lp_solve(A, b, c).status == LPStatus::Optimal;
}

} // namespace fptkit
