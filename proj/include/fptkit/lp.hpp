#pragma once

#include "fptkit/rational.hpp"
#include "fptkit/linalg.hpp"

namespace fptkit {

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
    LPStatus status;
    Rat value;
    QVec x;
};

// minimize c.x subject to A x = b, x >= 0 (two-phase simplex, Bland's rule,
// exact rational arithmetic).
LPResult lp_solve(const QMat& A, const QVec& b, const QVec& c);
bool lp_feasible(const QMat& A, const QVec& b);

} // namespace fptkit
