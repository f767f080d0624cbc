#include "fptkit/monomial.hpp"

#include "fptkit/errors.hpp"
#include "fptkit/groebner.hpp"
#include "fptkit/lp.hpp"

#include <algorithm>
#include <map>

namespace fptkit {

namespace {

bool graded_lex_less(const ExpVec& a, const ExpVec& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return a.e < b.e;
}

Int compositions_of(uint64_t t, uint32_t n) {
    Int c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(t + n - 1),
                 static_cast<unsigned long>(n - 1));
    return c;
}

// Visit every composition of t into n nonnegative parts.
template <typename F>
void for_each_composition(uint64_t t, uint32_t n, F&& visit) {
    std::vector<uint32_t> c(n, 0);
    c[0] = static_cast<uint32_t>(t);
    while (true) {
        visit(c);
        if (n == 1) break;
        size_t i = 0;
        while (i + 1 < n && c[i] == 0) ++i;
        if (i + 1 == n) break;
        uint32_t head = c[i];
        c[i] = 0;
        c[0] = head - 1;
        c[i + 1] += 1;
    }
}

// Feasibility rows for u in conv(gens) + orthant, as an equality system with
// slack columns: sum(lambda_i g_i) + mu = u, sum(lambda) = 1.
void newton_membership_system(const MonomialIdeal& a, QMat& A, size_t& nlam) {
    size_t n = a.nvars, g = a.gens.size();
    nlam = g;
    A.assign(n + 1, QVec(g + n, Rat(0)));
    for (size_t k = 0; k < n; ++k) {
        for (size_t i = 0; i < g; ++i) A[k][i] = long(a.gens[i].e[k]);
        A[k][g + k] = 1;
    }
    for (size_t i = 0; i < g; ++i) A[n][i] = 1;
}

bool in_newton_polyhedron(const MonomialIdeal& a, const std::vector<uint32_t>& u) {
    QMat A;
    size_t nlam = 0;
    newton_membership_system(a, A, nlam);
    (void)nlam;
    QVec b(a.nvars + 1);
    for (size_t k = 0; k < a.nvars; ++k) b[k] = long(u[k]);
    b[a.nvars] = 1;
    return lp_feasible(A, b);
}

} // namespace

MonomialIdeal monomial_ideal(uint32_t nvars, std::vector<ExpVec> gens) {
    if (nvars == 0) throw DomainError("ring must have at least one variable");
    for (const auto& m : gens)
        if (m.e.size() != nvars) throw DomainError("generator has wrong variable count");
    std::sort(gens.begin(), gens.end(), graded_lex_less);
    MonomialIdeal a;
    a.nvars = nvars;
    for (const auto& m : gens) {
        bool redundant = false;
        for (const auto& g : a.gens)
            if (exp_divides(g, m)) {
                redundant = true;
                break;
            }
        if (!redundant) a.gens.push_back(m);
    }
    return a;
}

bool contains(const MonomialIdeal& a, const ExpVec& m) {
    for (const auto& g : a.gens)
        if (exp_divides(g, m)) return true;
    return false;
}

bool ideal_subset(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.nvars != b.nvars) throw DomainError("variable count mismatch");
    for (const auto& g : a.gens)
        if (!contains(b, g)) return false;
    return true;
}

bool ideal_eq(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.nvars != b.nvars) return false;
    return a.gens == b.gens;
}

MonomialIdeal monomial_product(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.nvars != b.nvars) throw DomainError("variable count mismatch");
    std::vector<ExpVec> gens;
    for (const auto& x : a.gens)
        for (const auto& y : b.gens) gens.push_back(exp_add(x, y));
    return monomial_ideal(a.nvars, std::move(gens));
}

MonomialIdeal monomial_power(const MonomialIdeal& a, uint64_t k) {
    if (k == 0) return monomial_ideal(a.nvars, {ExpVec::of(std::vector<uint32_t>(a.nvars, 0))});
    MonomialIdeal r = a;
    for (uint64_t i = 1; i < k; ++i) r = monomial_product(r, a);
    return r;
}

MonomialIdeal monomial_bracket(const MonomialIdeal& a, uint64_t q) {
    if (q == 0) throw DomainError("bracket exponent must be positive");
    std::vector<ExpVec> gens;
    for (const auto& g : a.gens) gens.push_back(exp_scale(g, q));
    return monomial_ideal(a.nvars, std::move(gens));
}

QPolytope newton_polytope(const MonomialIdeal& a) {
    if (a.is_zero()) throw DomainError("Newton polyhedron of the zero ideal");
    if (a.is_unit()) throw DomainError("Newton polyhedron of the unit ideal");
    std::vector<QVec> pts;
    for (const auto& g : a.gens) {
        QVec p(a.nvars);
        for (size_t k = 0; k < a.nvars; ++k) p[k] = long(g.e[k]);
        pts.push_back(std::move(p));
    }
    std::vector<QVec> rays;
    for (size_t k = 0; k < a.nvars; ++k) {
        QVec e(a.nvars, Rat(0));
        e[k] = 1;
        rays.push_back(std::move(e));
    }
    return convex_hull(a.nvars, pts, rays);
}

Rat monomial_fpt(const MonomialIdeal& a) {
    if (a.is_zero()) throw DomainError("threshold of the zero ideal");
    if (a.is_unit()) throw DomainError("threshold of the unit ideal");
    size_t n = a.nvars, g = a.gens.size();
    // minimize t subject to t(1,...,1) = sum(lambda_i g_i) + mu, sum(lambda) = 1.
    QMat A(n + 1, QVec(1 + g + n, Rat(0)));
    QVec b(n + 1, Rat(0));
    for (size_t k = 0; k < n; ++k) {
        A[k][0] = 1;
        for (size_t i = 0; i < g; ++i) A[k][1 + i] = -long(a.gens[i].e[k]);
        A[k][1 + g + k] = -1;
    }
    for (size_t i = 0; i < g; ++i) A[n][1 + i] = 1;
    b[n] = 1;
    QVec c(1 + g + n, Rat(0));
    c[0] = 1;
    LPResult res = lp_solve(A, b, c);
    if (res.status != LPStatus::Optimal)
        throw std::logic_error("diagonal program for a proper monomial ideal must be solvable");
    if (res.value <= 0) throw std::logic_error("diagonal scale must be positive");
    return 1 / res.value;
}

MonomialIdeal integral_closure(const MonomialIdeal& a) {
    if (a.is_zero() || a.is_unit()) return a;
    size_t n = a.nvars;
    std::vector<uint32_t> box(n, 0);
    for (const auto& g : a.gens)
        for (size_t k = 0; k < n; ++k) box[k] = std::max(box[k], g.e[k]);
    uint64_t total = 1;
    for (size_t k = 0; k < n; ++k) {
        total *= uint64_t(box[k]) + 1;
        if (total > 1000000) throw ResourceCapError("closure candidate box exceeds 10^6 points");
    }

    std::vector<ExpVec> candidates;
    std::vector<uint32_t> u(n, 0);
    while (true) {
        candidates.push_back(ExpVec::of(u));
        size_t i = 0;
        while (i < n) {
            if (++u[i] <= box[i]) break;
            u[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    std::sort(candidates.begin(), candidates.end(), graded_lex_less);

    std::vector<ExpVec> accepted;
    for (const auto& m : candidates) {
        bool covered = false;
        for (const auto& g : accepted)
            if (exp_divides(g, m)) {
                covered = true;
                break;
            }
        if (covered) continue;
        if (in_newton_polyhedron(a, m.e)) accepted.push_back(m);
    }
    return monomial_ideal(a.nvars, std::move(accepted));
}

Int monomial_multiplicity(const MonomialIdeal& a) {
    if (a.is_zero() || a.is_unit())
        throw DomainError("multiplicity requires a proper nonzero ideal");
    size_t n = a.nvars;
    if (n > 4) throw ResourceCapError("multiplicity supports up to 4 variables");
    std::vector<uint32_t> pure(n, 0);
    for (const auto& g : a.gens) {
        size_t support = 0, var = 0;
        for (size_t k = 0; k < n; ++k)
            if (g.e[k]) {
                ++support;
                var = k;
            }
        if (support == 1 && (pure[var] == 0 || g.e[var] < pure[var])) pure[var] = g.e[var];
    }
    for (size_t k = 0; k < n; ++k)
        if (pure[k] == 0)
            throw DomainError("multiplicity requires a pure power of every variable");

    std::vector<QVec> corners;
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
        QVec c(n, Rat(0));
        for (size_t k = 0; k < n; ++k)
            if (mask & (uint64_t(1) << k)) c[k] = long(pure[k]);
        corners.push_back(std::move(c));
    }
    QPolytope region = convex_hull(n, corners);
    QPolytope gamma = newton_polytope(a);
    for (const auto& F : gamma.facets) {
        region = halfspace_cut(region, F);
        if (region.empty()) break;
    }
    Rat box_vol = 1;
    for (size_t k = 0; k < n; ++k) box_vol *= long(pure[k]);
    Rat inside = region.empty() ? Rat(0) : volume(region);
    Int fac;
    mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(n));
    Rat mult = (box_vol - inside) * Rat(fac);
    if (mult.get_den() != 1) throw std::logic_error("multiplicity must be an integer");
    return mult.get_num();
}

uint32_t monomial_height(const MonomialIdeal& a) {
    if (a.is_unit()) throw DomainError("height of the unit ideal");
    if (a.is_zero()) return 0;
    size_t n = a.nvars;
    if (n > 20) throw ResourceCapError("height search supports up to 20 variables");
    std::vector<uint32_t> supports;
    for (const auto& g : a.gens) {
        uint32_t mask = 0;
        for (size_t k = 0; k < n; ++k)
            if (g.e[k]) mask |= uint32_t(1) << k;
        supports.push_back(mask);
    }
    for (uint32_t size = 1; size <= n; ++size) {
        // Subsets of the given size, in increasing numeric order.
        uint32_t sub = (uint32_t(1) << size) - 1;
        while (sub < (uint32_t(1) << n)) {
            bool covers = true;
            for (uint32_t s : supports)
                if (!(s & sub)) {
                    covers = false;
                    break;
                }
            if (covers) return size;
            uint32_t low = sub & (~sub + 1);
            uint32_t ripple = sub + low;
            sub = ripple | (((sub ^ ripple) >> 2) / low);
        }
    }
    throw std::logic_error("support cover search must terminate");
}

uint64_t standard_count(const MonomialIdeal& a, uint64_t t) {
    if (compositions_of(t, a.nvars) > Int(2000000))
        throw ResourceCapError("degree slice exceeds 2*10^6 monomials");
    uint64_t count = 0;
    for_each_composition(t, a.nvars, [&](const std::vector<uint32_t>& c) {
        if (!contains(a, ExpVec::of(c))) ++count;
    });
    return count;
}

QPolytope gamma_t(const MonomialIdeal& a, uint64_t t) {
    if (compositions_of(t, a.nvars) > Int(2000000))
        throw ResourceCapError("degree slice exceeds 2*10^6 monomials");
    std::vector<QVec> pts;
    for_each_composition(t, a.nvars, [&](const std::vector<uint32_t>& c) {
        if (!contains(a, ExpVec::of(c))) return;
        QVec p(a.nvars);
        for (size_t k = 0; k < a.nvars; ++k) p[k] = long(c[k]);
        pts.push_back(std::move(p));
    });
    if (pts.empty()) return empty_polytope(a.nvars);
    return convex_hull(a.nvars, pts);
}

std::optional<Rat> relint_fpt_bound(const MonomialIdeal& a, uint64_t t, uint64_t t2) {
    if (t2 <= t) throw DomainError("probe degree must exceed the witness degree");
    QPolytope witness = gamma_t(a, t);
    if (witness.empty()) throw DomainError("ideal has no monomial of the witness degree");
    uint32_t n = a.nvars;
    QPolytope S = gamma_t(a, t2);
    if (S.empty()) throw std::logic_error("probe slice cannot be empty above a witness");
    if (n < 2 || S.affine_dim != int(n) - 1) return std::nullopt;
    QVec probe(n, rat(long(t2), long(n)));
    for (const auto& E : S.affine_eqs)
        if (q_dot(E.a, probe) != E.b) return std::nullopt;
    for (const auto& F : S.facets)
        if (q_dot(F.a, probe) <= F.b) return std::nullopt;
    return rat(long(n), long(t2));
}

std::vector<LimitingProbeLevel> limiting_probe(const Ring& R, const std::vector<Poly>& gens,
                                               const MonomialOrder& ord,
                                               const LimitingProbeConfig& cfg) {
    if (cfg.step == 0 || cfg.t_scale == 0) throw DomainError("step and t_scale must be positive");
    if (cfg.m_max > 12) throw ResourceCapError("doubling depth capped at 12");
    std::vector<LimitingProbeLevel> out;
    for (uint32_t m = 0; m <= cfg.m_max; ++m) {
        LimitingProbeLevel lvl;
        lvl.s = cfg.step << m;
        lvl.t = cfg.t_scale << m;
        auto prods = power_products(R, gens, lvl.s, cfg.product_cap, cfg.term_cap);
        auto gb = buchberger(R, prods, ord);
        lvl.a = initial_ideal(R, gb, ord);

        QPolytope slice = gamma_t(lvl.a, lvl.t);
        if (slice.empty()) {
            lvl.scaled_slice = empty_polytope(lvl.a.nvars);
        } else {
            Rat f = rat(1, long(uint64_t(1) << m));
            std::vector<QVec> scaled;
            for (const auto& v : slice.vertices) {
                QVec w(v.size());
                for (size_t k = 0; k < v.size(); ++k) w[k] = v[k] * f;
                scaled.push_back(std::move(w));
            }
            lvl.scaled_slice = convex_hull(lvl.a.nvars, scaled);
        }

        if (m > 0) {
            const LimitingProbeLevel& prev = out.back();
            lvl.graded_ok = ideal_subset(monomial_product(prev.a, prev.a), lvl.a);
            if (prev.scaled_slice.empty()) {
                lvl.chain_ok = true;
            } else if (lvl.scaled_slice.empty()) {
                lvl.chain_ok = false;
            } else {
                lvl.chain_ok = true;
                for (const auto& v : prev.scaled_slice.vertices)
                    if (!satisfies_h_rep(lvl.scaled_slice, v)) {
                        lvl.chain_ok = false;
                        break;
                    }
            }
        }
        out.push_back(std::move(lvl));
    }
    return out;
}

} // namespace fptkit
