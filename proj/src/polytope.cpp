#include "fptkit/polytope.hpp"

#include "fptkit/errors.hpp"
#include "fptkit/lp.hpp"

#include <algorithm>
#include <set>

namespace fptkit {

namespace {

bool qvec_less(const QVec& a, const QVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

// Scale to a primitive integer vector (lcm of denominators, gcd of entries).
// The direction is preserved.
void make_primitive(QVec& v, Rat* attached = nullptr) {
    Int l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    if (attached) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), attached->get_den().get_mpz_t());
    Int g = 0;
    auto fold = [&](const Rat& x) {
        Int num = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    };
    for (const auto& x : v) fold(x);
    if (attached) fold(*attached);
    if (g == 0) return;
    Rat f = rat(l, g);
    for (auto& x : v) x *= f;
    if (attached) *attached *= f;
}

struct Chart {
    QVec base;
    QMat basis; // columns of the span, stored as rows here (r x dim)
    QMat T;     // r x dim, chart(x) = T (x - base)

    QVec to_chart(const QVec& x) const {
        QVec d(x.size());
        for (size_t i = 0; i < x.size(); ++i) d[i] = x[i] - base[i];
        QVec y(T.size(), Rat(0));
        for (size_t r = 0; r < T.size(); ++r) y[r] = q_dot(T[r], d);
        return y;
    }
};

Chart build_chart(const QVec& base, const std::vector<QVec>& dirs) {
    size_t dim = base.size();
    Chart ch;
    ch.base = base;
    QMat cand = dirs;
    for (const auto& d : cand) {
        ch.basis.push_back(d);
        if (q_rank(ch.basis) != ch.basis.size()) ch.basis.pop_back();
    }
    size_t r = ch.basis.size();
    // T = (B^T B)^{-1} B^T with B = basis columns (dim x r).
    QMat G(r, QVec(r));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) G[i][j] = q_dot(ch.basis[i], ch.basis[j]);
    auto Ginv = q_inverse(G);
    if (!Ginv) throw std::logic_error("gram matrix of a basis must be invertible");
    ch.T.assign(r, QVec(dim, Rat(0)));
    for (size_t i = 0; i < r; ++i)
        for (size_t k = 0; k < dim; ++k)
            for (size_t j = 0; j < r; ++j) ch.T[i][k] += (*Ginv)[i][j] * ch.basis[j][k];
    return ch;
}

// Extreme rays of { z : rows . z >= 0 } via the double description method.
// Pre: the row matrix has full column rank (pointed dual cone).
std::vector<QVec> dd_extreme_rays(const QMat& rows, size_t d) {
    // Initial pointed cone from d independent rows.
    QMat M0;
    std::vector<size_t> init_idx;
    for (size_t i = 0; i < rows.size() && M0.size() < d; ++i) {
        M0.push_back(rows[i]);
        if (q_rank(M0) != M0.size()) {
            M0.pop_back();
        } else {
            init_idx.push_back(i);
        }
    }
    if (M0.size() != d) throw std::logic_error("dual cone is not pointed");
    auto M0inv = q_inverse(M0);
    if (!M0inv) throw std::logic_error("independent rows must be invertible");

    std::vector<QVec> rays;
    for (size_t j = 0; j < d; ++j) {
        QVec r(d);
        for (size_t i = 0; i < d; ++i) r[i] = (*M0inv)[i][j];
        make_primitive(r);
        rays.push_back(std::move(r));
    }

    std::vector<size_t> processed = init_idx;
    std::set<size_t> used(init_idx.begin(), init_idx.end());
    // zero[k] = indices into `processed` where ray k is tight.
    auto tight_set = [&](const QVec& z) {
        std::vector<size_t> t;
        for (size_t k = 0; k < processed.size(); ++k)
            if (q_dot(rows[processed[k]], z) == 0) t.push_back(k);
        return t;
    };

    for (size_t i = 0; i < rows.size(); ++i) {
        if (used.count(i)) continue;
        const QVec& m = rows[i];
        std::vector<Rat> val(rays.size());
        bool any_neg = false;
        for (size_t k = 0; k < rays.size(); ++k) {
            val[k] = q_dot(m, rays[k]);
            if (val[k] < 0) any_neg = true;
        }
        if (!any_neg) {
            processed.push_back(i);
            used.insert(i);
            continue;
        }
        std::vector<std::vector<size_t>> tights(rays.size());
        for (size_t k = 0; k < rays.size(); ++k) tights[k] = tight_set(rays[k]);
        auto subset_of = [](const std::vector<size_t>& a, const std::vector<size_t>& b) {
            size_t j = 0;
            for (size_t x : a) {
                while (j < b.size() && b[j] < x) ++j;
                if (j == b.size() || b[j] != x) return false;
            }
            return true;
        };
        std::vector<QVec> next;
        for (size_t k = 0; k < rays.size(); ++k)
            if (val[k] >= 0) next.push_back(rays[k]);
        for (size_t u = 0; u < rays.size(); ++u) {
            if (val[u] <= 0) continue;
            for (size_t w = 0; w < rays.size(); ++w) {
                if (val[w] >= 0) continue;
                // Adjacency: common tight set contained in no third ray's.
                std::vector<size_t> common;
                std::set_intersection(tights[u].begin(), tights[u].end(), tights[w].begin(),
                                      tights[w].end(), std::back_inserter(common));
                bool adjacent = true;
                for (size_t o = 0; o < rays.size() && adjacent; ++o) {
                    if (o == u || o == w) continue;
                    if (subset_of(common, tights[o])) adjacent = false;
                }
                if (!adjacent) continue;
                QVec z(m.size());
                for (size_t c = 0; c < m.size(); ++c)
                    z[c] = val[u] * rays[w][c] - val[w] * rays[u][c];
                make_primitive(z);
                next.push_back(std::move(z));
            }
        }
        std::sort(next.begin(), next.end(), qvec_less);
        next.erase(std::unique(next.begin(), next.end()), next.end());
        rays = std::move(next);
        processed.push_back(i);
        used.insert(i);
    }
    return rays;
}

Rat simplex_det(const std::vector<QVec>& simplex) {
    size_t d = simplex.size() - 1;
    QMat M(d, QVec(d));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) M[i][j] = simplex[i + 1][j] - simplex[0][j];
    return q_det(M);
}

Int factorial(uint32_t n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

// Cover conv(P.vertices) by simplices of P.affine_dim + 1 vertices each, by
// recursively fanning facets from the first vertex.
void triangulate(const QPolytope& P, std::vector<std::vector<QVec>>& out) {
    size_t k = size_t(P.affine_dim);
    const auto& V = P.vertices;
    if (V.size() == k + 1) {
        out.push_back(V);
        return;
    }
    const QVec& v0 = V[0];
    for (const auto& F : P.facets) {
        if (q_dot(F.a, v0) == F.b) continue;
        std::vector<QVec> VF;
        for (const auto& v : V)
            if (q_dot(F.a, v) == F.b) VF.push_back(v);
        QPolytope sub = convex_hull(P.dim, VF);
        std::vector<std::vector<QVec>> facet_simplices;
        triangulate(sub, facet_simplices);
        for (auto& S : facet_simplices) {
            S.insert(S.begin(), v0);
            out.push_back(std::move(S));
        }
    }
}

} // namespace

QPolytope empty_polytope(size_t dim) {
    QPolytope P;
    P.dim = dim;
    P.affine_dim = -1;
    return P;
}

QPolytope convex_hull(size_t dim, const std::vector<QVec>& points_in,
                      const std::vector<QVec>& rays_in) {
    if (dim < 1 || dim > 6) throw ResourceCapError("convex hull supports dimensions 1..6");
    if (points_in.size() > 10000) throw ResourceCapError("convex hull capped at 10^4 points");
    for (const auto& p : points_in)
        if (p.size() != dim) throw DomainError("point dimension mismatch");
    for (const auto& r : rays_in)
        if (r.size() != dim) throw DomainError("ray dimension mismatch");

    std::vector<QVec> pts = points_in;
    std::sort(pts.begin(), pts.end(), qvec_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::vector<QVec> rays = rays_in;
    for (auto& r : rays) {
        bool zero = std::all_of(r.begin(), r.end(), [](const Rat& x) { return x == 0; });
        if (zero) throw DomainError("zero vector is not a ray");
        make_primitive(r);
    }
    std::sort(rays.begin(), rays.end(), qvec_less);
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());

    if (pts.empty()) {
        if (!rays.empty()) throw DomainError("rays require at least one base point");
        return empty_polytope(dim);
    }

    QPolytope P;
    P.dim = dim;

    std::vector<QVec> dirs;
    for (const auto& p : pts) {
        QVec d(dim);
        for (size_t i = 0; i < dim; ++i) d[i] = p[i] - pts[0][i];
        dirs.push_back(std::move(d));
    }
    for (const auto& r : rays) dirs.push_back(r);
    Chart ch = build_chart(pts[0], dirs);
    size_t r = ch.basis.size();
    P.affine_dim = int(r);

    // Affine hull equations: orthogonal complement of the span.
    {
        QMat span = ch.basis;
        QMat comp = q_nullspace(span, dim);
        for (auto& a : comp) {
            Rat b = q_dot(a, pts[0]);
            make_primitive(a, &b);
            P.affine_eqs.push_back({a, b});
        }
        std::sort(P.affine_eqs.begin(), P.affine_eqs.end(),
                  [](const AffineEq& x, const AffineEq& y) {
                      return x.b != y.b ? x.b < y.b : qvec_less(x.a, y.a);
                  });
    }

    if (r == 0) {
        P.vertices = {pts[0]};
        return P;
    }

    // Dual cone rows: (chart(p), 1) per point, (T r, 0) per ray. Facets of the
    // chart polytope are the extreme rays (g, -c) of this cone.
    QMat rows;
    for (const auto& p : pts) {
        QVec y = ch.to_chart(p);
        y.push_back(Rat(1));
        rows.push_back(std::move(y));
    }
    for (const auto& rv : rays) {
        QVec d(dim);
        for (size_t i = 0; i < dim; ++i) d[i] = rv[i];
        QVec y(r, Rat(0));
        for (size_t k = 0; k < r; ++k) y[k] = q_dot(ch.T[k], d);
        y.push_back(Rat(0));
        rows.push_back(std::move(y));
    }
    std::vector<QVec> dual = dd_extreme_rays(rows, r + 1);

    for (const auto& z : dual) {
        bool gzero = true;
        for (size_t i = 0; i < r; ++i)
            if (z[i] != 0) gzero = false;
        if (gzero) continue; // the trivial inequality 0 >= -1
        // Lift g.y >= c to ambient coordinates: (g^T T) x >= c + g^T T base.
        QVec a(dim, Rat(0));
        for (size_t k = 0; k < dim; ++k)
            for (size_t i = 0; i < r; ++i) a[k] += z[i] * ch.T[i][k];
        Rat c = -z[r];
        Rat b = c + q_dot(a, ch.base);
        make_primitive(a, &b);
        P.facets.push_back({a, b});
    }
    std::sort(P.facets.begin(), P.facets.end(), [](const HalfSpace& x, const HalfSpace& y) {
        return x.b != y.b ? x.b < y.b : qvec_less(x.a, y.a);
    });

    // Pointedness: facet normals plus equation normals must span R^dim.
    {
        QMat normals;
        for (const auto& F : P.facets) normals.push_back(F.a);
        for (const auto& E : P.affine_eqs) normals.push_back(E.a);
        if (q_rank(normals) != dim)
            throw DomainError("polyhedron contains a line (no vertices)");
    }

    for (const auto& p : pts) {
        QMat tight;
        for (const auto& F : P.facets)
            if (q_dot(F.a, p) == F.b) tight.push_back(F.a);
        for (const auto& E : P.affine_eqs) tight.push_back(E.a);
        if (q_rank(tight) == dim) P.vertices.push_back(p);
    }
    for (const auto& rv : rays) {
        QVec d(dim);
        for (size_t i = 0; i < dim; ++i) d[i] = rv[i];
        QMat tight;
        for (const auto& F : P.facets)
            if (q_dot(F.a, d) == 0) tight.push_back(F.a);
        for (const auto& E : P.affine_eqs) tight.push_back(E.a);
        if (q_rank(tight) == dim - 1) P.rays.push_back(rv);
    }

    // Consistency of the two representations.
    for (const auto& p : pts) {
        for (const auto& F : P.facets)
            if (q_dot(F.a, p) < F.b) throw std::logic_error("input point violates a facet");
        for (const auto& E : P.affine_eqs)
            if (q_dot(E.a, p) != E.b) throw std::logic_error("input point off the affine hull");
    }
    for (const auto& rv : rays) {
        QVec d(dim);
        for (size_t i = 0; i < dim; ++i) d[i] = rv[i];
        for (const auto& F : P.facets)
            if (q_dot(F.a, d) < 0) throw std::logic_error("input ray violates a facet");
        for (const auto& E : P.affine_eqs)
            if (q_dot(E.a, d) != 0) throw std::logic_error("input ray off the affine hull");
    }
    if (P.vertices.empty()) throw std::logic_error("pointed polyhedron must have a vertex");
    return P;
}

bool contains(const QPolytope& P, const QVec& u) {
    if (P.empty()) return false;
    if (u.size() != P.dim) throw DomainError("point dimension mismatch");
    size_t nv = P.vertices.size(), nr = P.rays.size();
    QMat A(P.dim + 1, QVec(nv + nr, Rat(0)));
    QVec b(P.dim + 1);
    for (size_t k = 0; k < P.dim; ++k) {
        for (size_t i = 0; i < nv; ++i) A[k][i] = P.vertices[i][k];
        for (size_t j = 0; j < nr; ++j) A[k][nv + j] = P.rays[j][k];
        b[k] = u[k];
    }
    for (size_t i = 0; i < nv; ++i) A[P.dim][i] = 1;
    b[P.dim] = 1;
    return lp_feasible(A, b);
}

bool satisfies_h_rep(const QPolytope& P, const QVec& u) {
    if (P.empty()) return false;
    for (const auto& F : P.facets)
        if (q_dot(F.a, u) < F.b) return false;
    for (const auto& E : P.affine_eqs)
        if (q_dot(E.a, u) != E.b) return false;
    return true;
}

Rat diagonal_scale(const QPolytope& P) {
    if (P.empty()) throw DomainError("empty polyhedron");
    std::vector<QVec> units;
    for (size_t i = 0; i < P.dim; ++i) {
        QVec e(P.dim, Rat(0));
        e[i] = 1;
        units.push_back(std::move(e));
    }
    std::sort(units.begin(), units.end(), qvec_less);
    if (P.rays != units)
        throw DomainError("recession cone is not the coordinate orthant");
    size_t nv = P.vertices.size(), nr = P.rays.size();
    QMat A(P.dim + 1, QVec(1 + nv + nr, Rat(0)));
    QVec b(P.dim + 1, Rat(0));
    for (size_t k = 0; k < P.dim; ++k) {
        A[k][0] = 1;
        for (size_t i = 0; i < nv; ++i) A[k][1 + i] = -P.vertices[i][k];
        for (size_t j = 0; j < nr; ++j) A[k][1 + nv + j] = -P.rays[j][k];
    }
    for (size_t i = 0; i < nv; ++i) A[P.dim][1 + i] = 1;
    b[P.dim] = 1;
    QVec c(1 + nv + nr, Rat(0));
    c[0] = 1;
    LPResult res = lp_solve(A, b, c);
    if (res.status != LPStatus::Optimal)
        throw std::logic_error("diagonal scaling program must be solvable");
    return res.value;
}

Rat volume(const QPolytope& P) {
    if (P.empty()) return 0;
    if (!P.rays.empty()) throw DomainError("volume of an unbounded polyhedron");
    if (P.dim > 4) throw ResourceCapError("volume supports dimensions up to 4");
    if (size_t(P.affine_dim) < P.dim) return 0;
    std::vector<std::vector<QVec>> simplices;
    triangulate(P, simplices);
    Rat total = 0;
    Rat dfac = rat(Int(1), factorial(uint32_t(P.dim)));
    for (const auto& S : simplices) {
        Rat d = simplex_det(S);
        if (d < 0) d = -d;
        total += d * dfac;
    }
    return total;
}

QVec centroid(const QPolytope& P) {
    if (P.empty()) throw DomainError("centroid of the empty polyhedron");
    if (!P.rays.empty()) throw DomainError("centroid of an unbounded polyhedron");
    if (P.affine_dim == 0) return P.vertices[0];
    size_t k = size_t(P.affine_dim);

    std::vector<QVec> dirs;
    for (const auto& v : P.vertices) {
        QVec d(P.dim);
        for (size_t i = 0; i < P.dim; ++i) d[i] = v[i] - P.vertices[0][i];
        dirs.push_back(std::move(d));
    }
    Chart ch = build_chart(P.vertices[0], dirs);

    std::vector<std::vector<QVec>> simplices;
    triangulate(P, simplices);
    Rat wsum = 0;
    QVec acc(P.dim, Rat(0));
    for (const auto& S : simplices) {
        QMat M(k, QVec(k));
        QVec y0 = ch.to_chart(S[0]);
        for (size_t i = 0; i < k; ++i) {
            QVec yi = ch.to_chart(S[i + 1]);
            for (size_t j = 0; j < k; ++j) M[i][j] = yi[j] - y0[j];
        }
        Rat w = q_det(M);
        if (w < 0) w = -w;
        if (w == 0) continue;
        wsum += w;
        Rat frac = rat(1, long(k + 1));
        for (size_t c = 0; c < P.dim; ++c) {
            Rat mean = 0;
            for (const auto& v : S) mean += v[c];
            acc[c] += w * mean * frac;
        }
    }
    if (wsum == 0) throw std::logic_error("degenerate triangulation");
    for (auto& x : acc) x /= wsum;
    return acc;
}

QPolytope halfspace_cut(const QPolytope& P, const HalfSpace& H) {
    if (P.empty()) return empty_polytope(P.dim);
    if (!P.rays.empty()) throw DomainError("halfspace cut of an unbounded polyhedron");
    if (H.a.size() != P.dim) throw DomainError("hyperplane dimension mismatch");
    std::vector<QVec> keep;
    std::vector<std::pair<QVec, Rat>> above, below;
    for (const auto& v : P.vertices) {
        Rat s = q_dot(H.a, v) - H.b;
        if (s >= 0) keep.push_back(v);
        if (s > 0) above.emplace_back(v, s);
        if (s < 0) below.emplace_back(v, s);
    }
    for (const auto& [u, su] : above)
        for (const auto& [w, sw] : below) {
            QVec x(P.dim);
            Rat denom = su - sw;
            for (size_t i = 0; i < P.dim; ++i) x[i] = (su * w[i] - sw * u[i]) / denom;
            keep.push_back(std::move(x));
        }
    if (keep.empty()) return empty_polytope(P.dim);
    return convex_hull(P.dim, keep);
}

Rat grunbaum_bound(uint32_t n) {
    if (n < 1) throw DomainError("dimension must be positive");
    Int num, den;
    mpz_ui_pow_ui(den.get_mpz_t(), n + 1, n);
    mpz_ui_pow_ui(num.get_mpz_t(), n, n);
    return rat(den - num, den);
}

GrunbaumReport grunbaum_check(const QPolytope& P, const HalfSpace& H) {
    Rat vol = volume(P);
    if (vol == 0) throw DomainError("polytope must have positive volume");
    QVec cent = centroid(P);
    if (q_dot(H.a, cent) != H.b)
        throw DomainError("centroid is not exactly on the cut hyperplane");
    QPolytope Q = halfspace_cut(P, H);
    Rat ratio = volume(Q) / vol;
    Rat bound = grunbaum_bound(uint32_t(P.dim));
    return {ratio, bound, ratio <= bound, ratio == bound};
}

DavenportReport davenport_check(const QPolytope& P, uint32_t t, uint32_t n) {
    if (n < 1) throw DomainError("dimension must be positive");
    if (n > 3) throw ResourceCapError("lattice check supports n <= 3");
    if (t < 1 || t > 60) throw ResourceCapError("lattice check supports 1 <= t <= 60");
    if (P.empty()) throw DomainError("empty polytope");
    if (P.dim != n) throw DomainError("polytope dimension mismatch");
    for (const auto& v : P.vertices) {
        Rat sum = 0;
        for (const auto& x : v) {
            if (x < 0) throw DomainError("polytope leaves the simplex (negative coordinate)");
            sum += x;
        }
        if (sum > long(t)) throw DomainError("polytope leaves the simplex (sum exceeds t)");
    }

    Int count = 0;
    std::vector<uint32_t> u(n, 0);
    while (true) {
        uint64_t sum = 0;
        for (auto x : u) sum += x;
        if (sum <= t) {
            QVec pt(n);
            for (size_t i = 0; i < n; ++i) pt[i] = long(u[i]);
            if (satisfies_h_rep(P, pt)) count += 1;
        }
        size_t i = 0;
        while (i < u.size()) {
            if (++u[i] <= t) break;
            u[i] = 0;
            ++i;
        }
        if (i == u.size()) break;
    }

    Rat vol = volume(P);
    Rat bound_paper = 0;
    for (uint32_t i = 1; i + 1 <= n; ++i) {
        Int binom, ti;
        mpz_bin_uiui(binom.get_mpz_t(), n, i);
        mpz_ui_pow_ui(ti.get_mpz_t(), t, i);
        bound_paper += rat(binom * ti, factorial(i));
    }
    Rat gap = Rat(count) - vol;
    if (gap < 0) gap = -gap;
    Rat bound_corrected = bound_paper + 1;
    return {count,       vol,           bound_paper, bound_corrected,
            gap,         gap <= bound_paper, gap <= bound_corrected};
}

} // namespace fptkit
