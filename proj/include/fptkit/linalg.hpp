#pragma once

#include "fptkit/field.hpp"
#include "fptkit/rational.hpp"

#include <optional>
#include <vector>

namespace fptkit {

using QMat = std::vector<QVec>;
using FMat = std::vector<std::vector<FF>>;

Rat q_dot(const QVec& a, const QVec& b);

size_t q_rank(QMat A);
Rat q_det(QMat A); // pre: square
// One solution of A x = b, or nullopt if inconsistent.
std::optional<QVec> q_solve(QMat A, QVec b);
// Basis of { x : A x = 0 }.
QMat q_nullspace(const QMat& A, size_t ncols);
std::optional<QMat> q_inverse(QMat A);

size_t f_rank(const Field& F, FMat A);
std::optional<FMat> f_inverse(const Field& F, FMat A);
FMat f_nullspace(const Field& F, const FMat& A, size_t ncols);
// Row basis (reduced echelon form rows) of the span of the given rows.
FMat f_row_basis(const Field& F, const FMat& rows);
// Extend the (independent) rows to an invertible square matrix by greedily
// appending unit vectors.
FMat f_complete_to_basis(const Field& F, const FMat& rows, size_t n);
// Basis of the intersection of the two row spans.
FMat f_span_intersection(const Field& F, const FMat& A, const FMat& B, size_t n);
bool f_in_row_span(const Field& F, const FMat& rows, const std::vector<FF>& v);

} // namespace fptkit
