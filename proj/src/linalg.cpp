#include "fptkit/linalg.hpp"

#include "fptkit/errors.hpp"

namespace fptkit {

Rat q_dot(const QVec& a, const QVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

namespace {

// Row-reduce in place; returns pivot columns. Eliminates above and below.
std::vector<size_t> q_rref(QMat& A, size_t ncols) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < A.size(); ++col) {
        size_t sel = row;
        while (sel < A.size() && A[sel][col] == 0) ++sel;
        if (sel == A.size()) continue;
        std::swap(A[sel], A[row]);
        Rat inv = 1 / A[row][col];
        for (auto& x : A[row]) x *= inv;
        for (size_t r = 0; r < A.size(); ++r) {
            if (r == row || A[r][col] == 0) continue;
            Rat f = A[r][col];
            for (size_t c = 0; c < A[r].size(); ++c) A[r][c] -= f * A[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<size_t> f_rref(const Field& F, FMat& A, size_t ncols) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < A.size(); ++col) {
        size_t sel = row;
        while (sel < A.size() && F.is_zero(A[sel][col])) ++sel;
        if (sel == A.size()) continue;
        std::swap(A[sel], A[row]);
        FF inv = F.inv(A[row][col]);
        for (auto& x : A[row]) x = F.mul(x, inv);
        for (size_t r = 0; r < A.size(); ++r) {
            if (r == row || F.is_zero(A[r][col])) continue;
            FF f = A[r][col];
            for (size_t c = 0; c < A[r].size(); ++c)
                A[r][c] = F.sub(A[r][c], F.mul(f, A[row][c]));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

size_t q_rank(QMat A) {
    if (A.empty()) return 0;
    return q_rref(A, A[0].size()).size();
}

Rat q_det(QMat A) {
    size_t n = A.size();
    Rat det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t sel = col;
        while (sel < n && A[sel][col] == 0) ++sel;
        if (sel == n) return 0;
        if (sel != col) {
            std::swap(A[sel], A[col]);
            det = -det;
        }
        det *= A[col][col];
        Rat inv = 1 / A[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (A[r][col] == 0) continue;
            Rat f = A[r][col] * inv;
            for (size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
        }
    }
    return det;
}

std::optional<QVec> q_solve(QMat A, QVec b) {
    size_t m = A.size();
    size_t n = m ? A[0].size() : 0;
    for (size_t r = 0; r < m; ++r) A[r].push_back(b[r]);
    auto pivots = q_rref(A, n);
    for (size_t r = pivots.size(); r < m; ++r)
        if (A[r][n] != 0) return std::nullopt;
    QVec x(n, Rat(0));
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = A[k][n];
    return x;
}

QMat q_nullspace(const QMat& A, size_t ncols) {
    QMat M = A;
    auto pivots = q_rref(M, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivots) is_pivot[c] = true;
    QMat basis;
    for (size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        QVec v(ncols, Rat(0));
        v[free] = 1;
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -M[k][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QMat> q_inverse(QMat A) {
    size_t n = A.size();
    for (size_t r = 0; r < n; ++r) {
        A[r].resize(2 * n, Rat(0));
        A[r][n + r] = 1;
    }
    auto pivots = q_rref(A, n);
    if (pivots.size() != n) return std::nullopt;
    QMat inv(n, QVec(n));
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) inv[r][c] = A[r][n + c];
    return inv;
}

size_t f_rank(const Field& F, FMat A) {
    if (A.empty()) return 0;
    return f_rref(F, A, A[0].size()).size();
}

std::optional<FMat> f_inverse(const Field& F, FMat A) {
    size_t n = A.size();
    for (size_t r = 0; r < n; ++r) {
        A[r].resize(2 * n, F.zero());
        A[r][n + r] = F.one();
    }
    auto pivots = f_rref(F, A, n);
    if (pivots.size() != n) return std::nullopt;
    FMat inv(n, std::vector<FF>(n));
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) inv[r][c] = A[r][n + c];
    return inv;
}

FMat f_nullspace(const Field& F, const FMat& A, size_t ncols) {
    FMat M = A;
    auto pivots = f_rref(F, M, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivots) is_pivot[c] = true;
    FMat basis;
    for (size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<FF> v(ncols, F.zero());
        v[free] = F.one();
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = F.neg(M[k][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

FMat f_row_basis(const Field& F, const FMat& rows) {
    if (rows.empty()) return {};
    FMat M = rows;
    auto pivots = f_rref(F, M, M[0].size());
    M.resize(pivots.size());
    return M;
}

FMat f_complete_to_basis(const Field& F, const FMat& rows, size_t n) {
    FMat A = rows;
    size_t r = f_rank(F, A);
    if (r != rows.size()) throw DomainError("rows are linearly dependent");
    for (size_t i = 0; i < n && A.size() < n; ++i) {
        std::vector<FF> unit(n, F.zero());
        unit[i] = F.one();
        A.push_back(unit);
        if (f_rank(F, A) != A.size()) A.pop_back();
    }
    if (A.size() != n) throw DomainError("could not complete rows to a basis");
    return A;
}

FMat f_span_intersection(const Field& F, const FMat& A, const FMat& B, size_t n) {
    if (A.empty() || B.empty()) return {};
    // x in span(A) cap span(B): x = u^T A = v^T B. Solve [A^T | -B^T] null.
    size_t ra = A.size(), rb = B.size();
    FMat M(n, std::vector<FF>(ra + rb, F.zero()));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < ra; ++j) M[i][j] = A[j][i];
        for (size_t j = 0; j < rb; ++j) M[i][ra + j] = F.neg(B[j][i]);
    }
    FMat null = f_nullspace(F, M, ra + rb);
    FMat vecs;
    for (const auto& w : null) {
        std::vector<FF> x(n, F.zero());
        for (size_t j = 0; j < ra; ++j)
            for (size_t i = 0; i < n; ++i) x[i] = F.add(x[i], F.mul(w[j], A[j][i]));
        vecs.push_back(std::move(x));
    }
    return f_row_basis(F, vecs);
}

bool f_in_row_span(const Field& F, const FMat& rows, const std::vector<FF>& v) {
    FMat M = rows;
    size_t r0 = f_rank(F, M);
    M = rows;
    M.push_back(v);
    return f_rank(F, M) == r0;
}

} // namespace fptkit
