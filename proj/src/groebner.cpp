#include "fptkit/groebner.hpp"

#include "fptkit/errors.hpp"

#include <algorithm>
#include <set>

namespace fptkit {

namespace {

struct PairKey {
    uint64_t deg;
    std::vector<uint32_t> lcm;
    size_t i, j;

    bool operator<(const PairKey& o) const {
        if (deg != o.deg) return deg < o.deg;
        if (lcm != o.lcm) return lcm < o.lcm;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

std::vector<Poly> nonzero_monic(const Ring& R, const std::vector<Poly>& gens) {
    std::vector<Poly> out;
    for (const auto& g : gens)
        if (!g.is_zero()) out.push_back(poly_monic(R, g));
    return out;
}

} // namespace

Poly normal_form(const Ring& R, const Poly& f, const std::vector<Poly>& basis,
                 const MonomialOrder& ord) {
    Poly rem;
    Poly p = f;
    while (!p.is_zero()) {
        Term lt = initial_term(R, p, ord);
        bool reduced = false;
        for (const auto& g : basis) {
            const Term& lg = initial_term(R, g, ord);
            if (!exp_divides(lg.m, lt.m)) continue;
            FF coef = R.F.mul(lt.c, R.F.inv(lg.c));
            Poly factor = poly_monomial(R, exp_sub(lt.m, lg.m), coef);
            p = poly_sub(R, p, poly_mul(R, factor, g));
            reduced = true;
            break;
        }
        if (!reduced) {
            rem = poly_add(R, rem, poly_monomial(R, lt.m, lt.c));
            p = poly_sub(R, p, poly_monomial(R, lt.m, lt.c));
        }
    }
    return rem;
}

std::vector<Poly> buchberger(const Ring& R, const std::vector<Poly>& gens,
                             const MonomialOrder& ord, const GBCaps& caps) {
    std::vector<Poly> G = nonzero_monic(R, gens);
    if (G.empty()) return {};

    uint64_t pair_count = 0;
    std::set<PairKey> queue;
    auto push_pairs = [&](size_t j) {
        const ExpVec& lj = initial_term(R, G[j], ord).m;
        for (size_t i = 0; i < j; ++i) {
            const ExpVec& li = initial_term(R, G[i], ord).m;
            ExpVec l = exp_lcm(li, lj);
            if (l.deg == li.deg + lj.deg) continue; // disjoint leads reduce to zero
            if (++pair_count > caps.max_pairs)
                throw ResourceCapError("S-pair count cap exceeded");
            queue.insert({l.deg, l.e, i, j});
        }
    };
    for (size_t j = 0; j < G.size(); ++j) push_pairs(j);

    while (!queue.empty()) {
        PairKey key = *queue.begin();
        queue.erase(queue.begin());
        if (key.deg > caps.max_degree)
            throw ResourceCapError("S-pair degree cap exceeded");
        const Poly& f = G[key.i];
        const Poly& g = G[key.j];
        ExpVec lf = initial_term(R, f, ord).m;
        ExpVec lg = initial_term(R, g, ord).m;
        ExpVec l = exp_lcm(lf, lg);
        Poly s = poly_sub(R, poly_mul(R, poly_monomial(R, exp_sub(l, lf), R.F.one()), f),
                          poly_mul(R, poly_monomial(R, exp_sub(l, lg), R.F.one()), g));
        Poly r = normal_form(R, s, G, ord);
        if (r.is_zero()) continue;
        G.push_back(poly_monic(R, r));
        push_pairs(G.size() - 1);
    }

    // Minimalize: drop elements whose lead another lead divides.
    std::vector<Poly> minimal;
    for (size_t i = 0; i < G.size(); ++i) {
        const ExpVec& li = initial_term(R, G[i], ord).m;
        bool drop = false;
        for (size_t j = 0; j < G.size() && !drop; ++j) {
            if (i == j) continue;
            const ExpVec& lj = initial_term(R, G[j], ord).m;
            if (!exp_divides(lj, li)) continue;
            if (li == lj) {
                if (j < i) drop = true; // equal leads: keep the earlier one
            } else {
                drop = true;
            }
        }
        if (!drop) minimal.push_back(G[i]);
    }

    // Tail-reduce each element against the others.
    std::vector<Poly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(poly_monic(R, normal_form(R, minimal[i], others, ord)));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
        return ord.greater(initial_term(R, a, ord).m, initial_term(R, b, ord).m);
    });
    return reduced;
}

MonomialIdeal initial_ideal(const Ring& R, const std::vector<Poly>& gb,
                            const MonomialOrder& ord) {
    std::vector<ExpVec> leads;
    for (const auto& g : gb)
        if (!g.is_zero()) leads.push_back(initial_term(R, g, ord).m);
    return monomial_ideal(uint32_t(R.nvars()), std::move(leads));
}

uint64_t hilbert_value(const Ring& R, const std::vector<Poly>& gens, uint64_t t,
                       const GBCaps& caps) {
    for (const auto& g : gens)
        if (!g.is_zero() && !is_homogeneous(g))
            throw DomainError("homogeneous generators required");
    auto gb = buchberger(R, gens, grevlex_order(), caps);
    return standard_count(initial_ideal(R, gb, grevlex_order()), t);
}

uint32_t height(const Ring& R, const std::vector<Poly>& gens, const GBCaps& caps) {
    for (const auto& g : gens)
        if (!g.is_zero() && !is_homogeneous(g))
            throw DomainError("homogeneous generators required");
    auto gb = buchberger(R, gens, grevlex_order(), caps);
    MonomialIdeal ini = initial_ideal(R, gb, grevlex_order());
    if (ini.is_unit()) throw DomainError("height of the unit ideal");
    return monomial_height(ini);
}

} // namespace fptkit
