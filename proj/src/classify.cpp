#include "fptkit/classify.hpp"

#include "fptkit/errors.hpp"
#include "fptkit/monomial.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace fptkit {

namespace {

std::vector<Poly> drop_zero(const std::vector<Poly>& gens) {
    std::vector<Poly> out;
    for (const auto& g : gens)
        if (!g.is_zero()) out.push_back(g);
    return out;
}

// Every generator a nonzero form of one positive degree.
uint64_t common_degree(const std::vector<Poly>& gens) {
    if (gens.empty()) throw DomainError("generators must span a nonzero ideal");
    uint64_t d = 0;
    for (const auto& g : gens) {
        if (!is_homogeneous(g)) throw DomainError("generators must share a single degree");
        uint64_t dg = poly_deg(g);
        if (d == 0) d = dg;
        if (dg != d || dg == 0) throw DomainError("generators must share a single degree");
    }
    return d;
}

bool support_within(const Poly& f, size_t k) {
    for (const auto& t : f.t)
        for (size_t j = k; j < t.m.e.size(); ++j)
            if (t.m.e[j] != 0) return false;
    return true;
}

FieldCfg field_cfg(const Field& F) { return FieldCfg{F.p(), F.s(), F.modulus()}; }

Ring prefix_ring(const Ring& R, size_t live) {
    return make_ring(field_cfg(R.F),
                     std::vector<std::string>(R.vars.begin(), R.vars.begin() + live));
}

// pre: support_within(f, dst.nvars())
Poly truncate_vars(const Ring& dst, const Poly& f) {
    std::vector<Term> terms;
    for (const auto& t : f.t) {
        std::vector<uint32_t> e(t.m.e.begin(), t.m.e.begin() + dst.nvars());
        terms.push_back({ExpVec::of(std::move(e)), t.c});
    }
    return poly_from_terms(dst, std::move(terms));
}

Poly embed_poly(const Field& small, const Field& big, const FF& root, const Ring& dst,
                const Poly& f) {
    std::vector<Term> terms;
    for (const auto& t : f.t) terms.push_back({t.m, embed(small, big, root, t.c)});
    return poly_from_terms(dst, std::move(terms));
}

// Coefficient matrix of the polynomials over their combined monomial support.
struct CoeffRows {
    FMat rows;
    std::vector<ExpVec> index;
};

CoeffRows coeff_rows(const Ring& R, const std::vector<Poly>& ps) {
    CoeffRows out;
    std::unordered_map<ExpVec, size_t, ExpHash> col;
    for (const auto& f : ps)
        for (const auto& t : f.t)
            if (col.emplace(t.m, 0).second) out.index.push_back(t.m);
    std::sort(out.index.begin(), out.index.end(), lex_greater);
    for (size_t j = 0; j < out.index.size(); ++j) col[out.index[j]] = j;
    for (const auto& f : ps) {
        std::vector<FF> row(out.index.size(), R.F.zero());
        for (const auto& t : f.t) row[col[t.m]] = t.c;
        out.rows.push_back(std::move(row));
    }
    return out;
}

std::vector<Poly> rows_to_polys(const Ring& R, const FMat& rows,
                                const std::vector<ExpVec>& index) {
    std::vector<Poly> out;
    for (const auto& row : rows) {
        std::vector<Term> terms;
        for (size_t j = 0; j < index.size(); ++j)
            if (!R.F.is_zero(row[j])) terms.push_back({index[j], row[j]});
        Poly f = poly_from_terms(R, std::move(terms));
        if (!f.is_zero()) out.push_back(std::move(f));
    }
    return out;
}

// Reduced row basis of the linear span of all order-(d-1) iterated partial
// derivatives of the generators, as coefficient rows over the variables.
FMat derivative_span(const Ring& R, std::vector<Poly> cur, uint64_t d) {
    const size_t v = R.nvars();
    for (uint64_t round = 1; round + 1 <= d; ++round) {
        std::vector<Poly> next;
        for (const auto& f : cur)
            for (size_t j = 0; j < v; ++j) {
                Poly g = poly_derivative(R, f, j);
                if (!g.is_zero()) next.push_back(std::move(g));
            }
        if (next.empty()) return {};
        CoeffRows cr = coeff_rows(R, next);
        cur = rows_to_polys(R, f_row_basis(R.F, cr.rows), cr.index);
    }
    FMat lin;
    for (const auto& f : cur) {
        std::vector<FF> row(v, R.F.zero());
        for (const auto& t : f.t)
            for (size_t j = 0; j < v; ++j)
                if (t.m.e[j] == 1) row[j] = t.c;
        lin.push_back(std::move(row));
    }
    return f_row_basis(R.F, lin);
}

// Coefficient forms of the degree-(< d) part of every f(z + w): their common
// projective zero locus is the set of points at which every generator
// vanishes to order d.
struct ConeData {
    Ring Rv;
    std::vector<Poly> coeffs;
};

ConeData cone_ideal(const Ring& R, const std::vector<Poly>& gens, size_t live, uint64_t d) {
    ConeData cd{prefix_ring(R, live), {}};
    std::vector<std::string> names;
    for (size_t i = 0; i < live; ++i) names.push_back("z" + std::to_string(i));
    for (size_t i = 0; i < live; ++i) names.push_back("w" + std::to_string(i));
    Ring D = make_ring(field_cfg(R.F), std::move(names));
    std::vector<Poly> images;
    for (size_t i = 0; i < live; ++i)
        images.push_back(poly_add(D, poly_var(D, i), poly_var(D, live + i)));
    for (const auto& g : gens) {
        Poly fD = substitute_images(cd.Rv, D, truncate_vars(cd.Rv, g), images);
        std::map<std::vector<uint32_t>, std::vector<Term>> buckets;
        for (const auto& t : fD.t) {
            std::vector<uint32_t> beta(t.m.e.begin(), t.m.e.begin() + live);
            uint64_t bdeg = 0;
            for (auto x : beta) bdeg += x;
            if (bdeg >= d) continue;
            std::vector<uint32_t> gamma(t.m.e.begin() + live, t.m.e.end());
            buckets[std::move(beta)].push_back({ExpVec::of(std::move(gamma)), t.c});
        }
        for (auto& [beta, terms] : buckets) {
            Poly G = poly_from_terms(cd.Rv, std::move(terms));
            if (!G.is_zero()) cd.coeffs.push_back(std::move(G));
        }
    }
    return cd;
}

// First point of projective space, charts by position of the leading one,
// trailing coordinates counted up with the rightmost fastest, at which every
// given polynomial vanishes.
std::optional<std::vector<FF>> first_cone_point(const Ring& Rv, const std::vector<Poly>& gs,
                                                uint64_t max_points) {
    const Field& F = Rv.F;
    const size_t live = Rv.nvars();
    const uint64_t q = F.q();
    uint64_t total = 0, chart = 1;
    for (size_t k = 0; k < live; ++k) {
        total += chart;
        if (total > max_points)
            throw ResourceCapError("projective point search exceeds the point cap");
        if (k + 1 < live) {
            if (chart > max_points / q + 1)
                throw ResourceCapError("projective point search exceeds the point cap");
            chart *= q;
        }
    }
    std::vector<FF> pt(live, F.zero());
    for (size_t lead = 0; lead < live; ++lead) {
        std::fill(pt.begin(), pt.end(), F.zero());
        pt[lead] = F.one();
        std::vector<uint64_t> digit(live - lead - 1, 0);
        while (true) {
            for (size_t i = 0; i < digit.size(); ++i)
                pt[lead + 1 + i] = F.element(digit[i]);
            bool hit = true;
            for (const auto& g : gs)
                if (!F.is_zero(poly_eval(Rv, g, pt))) {
                    hit = false;
                    break;
                }
            if (hit) return pt;
            size_t i = digit.size();
            while (i > 0 && digit[i - 1] + 1 == q) digit[--i] = 0;
            if (i == 0) break;
            digit[i - 1] += 1;
        }
    }
    return std::nullopt;
}

// Invertible matrix whose last column is the point, filled out with unit
// columns in ascending order.
FMat descent_matrix(const Field& F, const std::vector<FF>& point) {
    const size_t live = point.size();
    FMat chosen{point};
    std::vector<size_t> units;
    for (size_t j = 0; j < live && chosen.size() < live; ++j) {
        std::vector<FF> e(live, F.zero());
        e[j] = F.one();
        chosen.push_back(e);
        if (f_rank(F, chosen) == chosen.size())
            units.push_back(j);
        else
            chosen.pop_back();
    }
    if (chosen.size() != live)
        throw std::logic_error("unit vectors must complete a nonzero point to a basis");
    FMat M(live, std::vector<FF>(live, F.zero()));
    for (size_t k = 0; k < units.size(); ++k) M[units[k]][k] = F.one();
    for (size_t i = 0; i < live; ++i) M[i][live - 1] = point[i];
    return M;
}

FMat extend_identity(const Field& F, const FMat& block, size_t v0) {
    FMat M(v0, std::vector<FF>(v0, F.zero()));
    for (size_t i = 0; i < block.size(); ++i)
        for (size_t j = 0; j < block.size(); ++j) M[i][j] = block[i][j];
    for (size_t i = block.size(); i < v0; ++i) M[i][i] = F.one();
    return M;
}

std::vector<ExpVec> degree_monomials(uint32_t nvars, uint64_t d) {
    Int count;
    mpz_bin_uiui(count.get_mpz_t(), d + nvars - 1, nvars - 1);
    if (count > 2000000)
        throw ResourceCapError("closure witness exceeds the monomial cap");
    std::vector<ExpVec> out;
    std::vector<uint32_t> c(nvars, 0);
    c[0] = uint32_t(d);
    while (true) {
        out.push_back(ExpVec::of(c));
        size_t i = 0;
        while (c[i] == 0) ++i;
        if (i + 1 >= nvars) break;
        uint32_t head = c[i];
        c[i] = 0;
        c[0] = head - 1;
        c[i + 1] += 1;
    }
    return out;
}

} // namespace

EssResult essential_codim(const Ring& R, const std::vector<Poly>& gens0, const EssConfig& cfg) {
    std::vector<Poly> gens = drop_zero(gens0);
    const uint64_t d = common_degree(gens);
    const size_t v0 = R.nvars();
    if (cfg.ext_max > 4)
        throw ResourceCapError("field extensions beyond degree 4 are not representable");

    FMat span = derivative_span(R, gens, d);
    const uint32_t r_span = uint32_t(span.size());

    EssResult res;
    if (d < R.F.p()) {
        if (r_span == 0)
            throw std::logic_error(
                "a nonzero form has a nonzero derivative span below the characteristic");
        res.method = "derivative-span";
        res.lower = res.upper = r_span;
        res.exact = true;
        if (r_span < v0) {
            FMat C = f_complete_to_basis(R.F, span, v0);
            auto M = f_inverse(R.F, C);
            if (!M) throw std::logic_error("span completion must be invertible");
            std::vector<Poly> tg;
            for (const auto& f : gens) {
                Poly g = linear_change(R, f, *M);
                if (!support_within(g, r_span))
                    throw std::logic_error("derivative span must capture the generators");
                tg.push_back(std::move(g));
            }
            Ring Rv = prefix_ring(R, r_span);
            std::vector<Poly> small;
            for (const auto& g : tg) small.push_back(truncate_vars(Rv, g));
            if (derivative_span(Rv, small, d).size() != r_span)
                throw std::logic_error("derivative span must be stable under restriction");
            res.certificate.push_back(EssStep{R.F.s(), *M});
        }
        apply_certificate(R, gens, res);
        return res;
    }

    res.method = "point-search";
    const uint32_t low = std::max(r_span, height(R, gens, cfg.gb));

    Ring curR = R;
    std::vector<Poly> cur = gens;
    size_t live = v0;
    bool certified = false;
    while (true) {
        ConeData cd = cone_ideal(curR, cur, live, d);
        if (height(cd.Rv, cd.coeffs, cfg.gb) == live) {
            certified = true;
            break;
        }
        std::vector<uint32_t> degrees{curR.F.s()};
        for (uint32_t s = 2 * curR.F.s(); s <= cfg.ext_max; s += curR.F.s())
            degrees.push_back(s);
        std::optional<std::vector<FF>> point;
        uint32_t found_s = 0;
        for (uint32_t s : degrees) {
            if (s == curR.F.s()) {
                point = first_cone_point(cd.Rv, cd.coeffs, cfg.max_points);
            } else {
                Ring RvBig = make_ring(FieldCfg{R.F.p(), s, {}}, cd.Rv.vars);
                FF root = embedding_root(curR.F, RvBig.F);
                std::vector<Poly> big;
                for (const auto& g : cd.coeffs)
                    big.push_back(embed_poly(curR.F, RvBig.F, root, RvBig, g));
                point = first_cone_point(RvBig, big, cfg.max_points);
            }
            found_s = s;
            if (point) break;
        }
        if (!point) break;
        if (found_s > curR.F.s()) {
            Ring newR = make_ring(FieldCfg{R.F.p(), found_s, {}}, R.vars);
            FF root = embedding_root(curR.F, newR.F);
            std::vector<Poly> lifted;
            for (const auto& f : cur)
                lifted.push_back(embed_poly(curR.F, newR.F, root, newR, f));
            curR = std::move(newR);
            cur = std::move(lifted);
        }
        FMat M = extend_identity(curR.F, descent_matrix(curR.F, *point), v0);
        std::vector<Poly> next;
        for (const auto& f : cur) {
            Poly g = linear_change(curR, f, M);
            if (!support_within(g, live - 1))
                throw std::logic_error("cone point must eliminate the last live variable");
            next.push_back(std::move(g));
        }
        res.certificate.push_back(EssStep{curR.F.s(), M});
        cur = std::move(next);
        live -= 1;
    }
    if (certified) {
        res.lower = res.upper = uint32_t(live);
        res.exact = true;
    } else {
        res.lower = low;
        res.upper = uint32_t(live);
        res.exact = false;
    }
    if (res.lower > res.upper)
        throw std::logic_error("codimension bounds crossed");
    apply_certificate(R, gens, res);
    return res;
}

std::pair<Ring, std::vector<Poly>> apply_certificate(const Ring& R,
                                                     const std::vector<Poly>& gens,
                                                     const EssResult& ess) {
    Ring curR = R;
    std::vector<Poly> cur = drop_zero(gens);
    for (const auto& step : ess.certificate) {
        if (step.s < curR.F.s() || step.s % curR.F.s() != 0)
            throw DomainError("certificate fields must refine the current field");
        if (step.s > curR.F.s()) {
            Ring newR = make_ring(FieldCfg{R.F.p(), step.s, {}}, R.vars);
            FF root = embedding_root(curR.F, newR.F);
            std::vector<Poly> lifted;
            for (const auto& f : cur)
                lifted.push_back(embed_poly(curR.F, newR.F, root, newR, f));
            curR = std::move(newR);
            cur = std::move(lifted);
        }
        if (step.M.size() != R.nvars())
            throw DomainError("certificate matrix has the wrong shape");
        if (!f_inverse(curR.F, step.M))
            throw DomainError("certificate matrix must be invertible");
        for (auto& f : cur) f = linear_change(curR, f, step.M);
    }
    for (const auto& f : cur)
        if (!support_within(f, ess.upper))
            throw DomainError("certificate does not confine the generators");
    return {std::move(curR), std::move(cur)};
}

std::pair<Ring, std::vector<Poly>> restrict_hyperplane(const Ring& R,
                                                       const std::vector<Poly>& gens,
                                                       const Poly& ell) {
    if (ell.is_zero()) throw DomainError("zero form cannot cut a hyperplane");
    if (poly_deg(ell) != 1 || !is_homogeneous(ell))
        throw DomainError("hyperplane form must be linear");
    std::vector<FF> coef(R.nvars(), R.F.zero());
    for (const auto& t : ell.t)
        for (size_t j = 0; j < R.nvars(); ++j)
            if (t.m.e[j] == 1) coef[j] = t.c;
    size_t lead = 0;
    while (R.F.is_zero(coef[lead])) ++lead;
    std::vector<std::string> names;
    for (size_t j = 0; j < R.nvars(); ++j)
        if (j != lead) names.push_back(R.vars[j]);
    Ring dst = make_ring(field_cfg(R.F), std::move(names));
    FF scale = R.F.neg(R.F.inv(coef[lead]));
    std::vector<Poly> images(R.nvars());
    Poly sub = poly_const(dst, dst.F.zero());
    for (size_t j = 0, j2 = 0; j < R.nvars(); ++j) {
        if (j == lead) continue;
        images[j] = poly_var(dst, j2);
        if (!R.F.is_zero(coef[j]))
            sub = poly_add(dst, sub, poly_scale(dst, poly_var(dst, j2), R.F.mul(scale, coef[j])));
        ++j2;
    }
    images[lead] = std::move(sub);
    std::vector<Poly> out;
    for (const auto& g : gens) {
        Poly f = substitute_images(R, dst, g, images);
        if (!f.is_zero()) out.push_back(std::move(f));
    }
    return {std::move(dst), std::move(out)};
}

TheoremAReport theorem_a_verdict(const Ring& R, const std::vector<Poly>& gens0, uint32_t e_max,
                                 const TheoremACfg& cfg) {
    std::vector<Poly> gens = drop_zero(gens0);
    TheoremAReport rep;
    rep.d = common_degree(gens);
    rep.h = height(R, gens, cfg.gb);
    rep.ess = essential_codim(R, gens, cfg.ess);
    rep.bounds = fpt_bounds(R, gens, e_max, cfg.nu, cfg.gb);
    const Rat target = rat(long(rep.h), long(rep.d));
    if (rep.ess.exact && rep.ess.upper == rep.h) {
        rep.verdict = "equality-case";
        if (rep.bounds.lower > target ||
            (rep.bounds.upper && *rep.bounds.upper < target))
            throw std::logic_error("equality case must pin the threshold at h over d");
        const std::vector<Poly> tg = apply_certificate(R, gens, rep.ess).second;
        bool monomial = true;
        for (const auto& g : tg)
            if (g.t.size() != 1) monomial = false;
        if (monomial) {
            std::vector<ExpVec> ms;
            for (const auto& g : tg) {
                std::vector<uint32_t> e(g.t[0].m.e.begin(), g.t[0].m.e.begin() + rep.h);
                ms.push_back(ExpVec::of(std::move(e)));
            }
            MonomialIdeal closure = integral_closure(monomial_ideal(rep.h, std::move(ms)));
            MonomialIdeal full = monomial_ideal(rep.h, degree_monomials(rep.h, rep.d));
            if (!ideal_eq(closure, full))
                throw std::logic_error("equality case closure must be the full power");
            rep.closure_witness = std::move(closure);
        }
    } else if (rep.ess.lower > rep.h && rep.bounds.lower > target) {
        rep.verdict = "strict-case";
    } else {
        rep.verdict = "inconclusive";
    }
    return rep;
}

TheoremBReport theorem_b_check(const Ring& R, const std::vector<Poly>& gens0, const Rat& c,
                               const std::vector<std::vector<Poly>>& candidate_primes,
                               uint32_t e_max, const NuCaps& caps, uint64_t product_cap) {
    std::vector<Poly> gens = drop_zero(gens0);
    TheoremBReport rep;
    rep.c = c;
    rep.d = common_degree(gens);
    if (e_max == 0) throw DomainError("at least one probe level is required");
    for (uint32_t e = 1; e <= e_max && !rep.sharp_probe; ++e) {
        rep.e_probed = e;
        rep.sharp_probe = sharply_f_pure_at(R, gens, c, e, caps);
    }
    uint64_t q = 1;
    for (uint32_t i = 0; i < rep.e_probed; ++i) q *= R.F.p();
    Int lvl = rat_ceil(c * long(q - 1));
    if (!lvl.fits_ulong_p()) throw ResourceCapError("product level exceeds 64 bits");
    const uint64_t r = lvl.get_ui();
    std::vector<Poly> products = power_products(R, gens, r, product_cap);

    bool any_compatible = false;
    for (const auto& forms : candidate_primes) {
        PrimeCheck pc;
        pc.forms = forms;
        pc.h = uint32_t(forms.size());
        ColonIdeal C = colon_linear_prime(R, forms, q);
        auto inv = f_inverse(R.F, C.frame);
        if (!inv) throw std::logic_error("colon frame must be invertible");
        std::vector<uint32_t> he(R.nvars(), 0);
        for (uint32_t i = 0; i < pc.h; ++i) he[i] = uint32_t(q - 1);
        ExpVec head = ExpVec::of(std::move(he));
        pc.compatible = true;
        for (const auto& P : products) {
            Poly g = linear_change(R, P, *inv);
            for (const auto& t : g.t) {
                if (!contains(C.part, t.m)) pc.compatible = false;
                bool below = true;
                for (auto x : t.m.e)
                    if (x >= q) below = false;
                if (below && exp_divides(head, t.m)) pc.witness_found = true;
            }
        }
        pc.degree_inequality = rep.d * r >= uint64_t(pc.h) * (q - 1);
        if (rep.sharp_probe && pc.compatible && !pc.witness_found)
            throw std::logic_error("compatible sharp survivor must carry a witness monomial");
        if (pc.compatible) {
            any_compatible = true;
            rep.h = std::max(rep.h, pc.h);
        }
        rep.primes.push_back(std::move(pc));
    }
    rep.bound_holds = any_compatible && c >= rat(long(rep.h), long(rep.d));
    if (!rep.sharp_probe) {
        rep.conclusion = "hypothesis-fails";
    } else {
        bool verified = any_compatible && rep.bound_holds;
        for (const auto& pc : rep.primes)
            if (pc.compatible && !(pc.degree_inequality && pc.witness_found)) verified = false;
        rep.conclusion = verified ? "hypothesis-holds-and-bound-verified" : "inconclusive";
    }
    return rep;
}

} // namespace fptkit
