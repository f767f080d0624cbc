#pragma once

#include "fptkit/rational.hpp"

#include <cstdint>
#include <vector>

namespace fptkit {

// a.x >= b
struct HalfSpace {
    QVec a;
    Rat b;
};

// a.x == b
struct AffineEq {
    QVec a;
    Rat b;
};

// Convex polyhedron with both representations. `vertices` are exactly the
// extreme points and `rays` the extreme recession directions (primitive
// integer vectors); the facet list together with `affine_eqs` is an exact
// irredundant H-description. Everything is sorted, so equal polyhedra have
// equal representations.
struct QPolytope {
    size_t dim = 0;
    int affine_dim = -1; // -1 for the empty polyhedron
    std::vector<QVec> vertices;
    std::vector<QVec> rays;
    std::vector<HalfSpace> facets;
    std::vector<AffineEq> affine_eqs;

    bool empty() const { return affine_dim < 0; }
};

QPolytope empty_polytope(size_t dim);

// caps: dim <= 6, at most 10^4 points. Input with a lineality direction is
// rejected (such input cannot arise from points plus coordinate rays).
QPolytope convex_hull(size_t dim, const std::vector<QVec>& points,
                      const std::vector<QVec>& rays = {});

// Exact LP on the V-description: u = sum lambda_i v_i + sum mu_j r_j.
bool contains(const QPolytope& P, const QVec& u);

// Does the point satisfy the cached H-description (facets + affine_eqs)?
bool satisfies_h_rep(const QPolytope& P, const QVec& u);

// min { t : t*(1,...,1) in P }. Requires the recession cone to be exactly the
// coordinate orthant.
Rat diagonal_scale(const QPolytope& P);

// Ambient-dimension Lebesgue measure; 0 when affine_dim < dim. Requires a
// bounded polytope and dim <= 4.
Rat volume(const QPolytope& P);

// Centroid with respect to the affine-hull measure (any affine_dim >= 0).
QVec centroid(const QPolytope& P);

// P intersect {a.x >= b}; requires bounded P. The empty result is an empty
// polytope, not an error.
QPolytope halfspace_cut(const QPolytope& P, const HalfSpace& H);

// 1 - (n/(n+1))^n
Rat grunbaum_bound(uint32_t n);

struct GrunbaumReport {
    Rat ratio;
    Rat bound;
    bool holds;
    bool equality;
};

// Requires vol(P) > 0 and the centroid exactly on the cut hyperplane; checks
// vol(P cap {a.x >= b}) / vol(P) <= 1 - (n/(n+1))^n.
GrunbaumReport grunbaum_check(const QPolytope& P, const HalfSpace& H);

struct DavenportReport {
    Int lattice_count;
    Rat proj_volume;
    Rat bound_paper;     // sum_{i=1}^{n-1} C(n,i) t^i / i!
    Rat bound_corrected; // bound_paper + 1
    Rat gap;             // |lattice_count - proj_volume|
    bool holds_paper;
    bool holds_corrected;
};

// P must lie in { x >= 0, sum x_i <= t } in R^n; caps n <= 3, t <= 60.
DavenportReport davenport_check(const QPolytope& P, uint32_t t, uint32_t n);

} // namespace fptkit
