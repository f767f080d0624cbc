#include "fptkit/frobenius.hpp"

#include "fptkit/errors.hpp"
#include "fptkit/linalg.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_map>

namespace fptkit {

namespace {

uint64_t checked_q(uint64_t p, uint32_t e) {
    if (e == 0) throw DomainError("Frobenius level must be positive");
    uint64_t q = 1;
    for (uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > (uint64_t(1) << 20)) throw ResourceCapError("p^e exceeds 2^20");
    }
    return q;
}

bool is_power_of(uint64_t p, uint64_t q) {
    if (q < p) return false;
    while (q % p == 0) q /= p;
    return q == 1;
}

std::vector<Poly> validated_generators(const Ring& R, const std::vector<Poly>& gens) {
    std::vector<Poly> out;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!is_homogeneous(g)) throw DomainError("homogeneous generators required");
        if (g.t.back().m.deg == 0) throw DomainError("generators must have positive degree");
        out.push_back(g);
    }
    if (out.empty()) throw DomainError("the zero ideal has no Frobenius level");
    return out;
}

// ---- truncated product levels, packed exponent kernel ----

using PTerm = std::pair<uint64_t, FF>;
using PPoly = std::vector<PTerm>; // key-descending, monic, nonzero coefficients

struct Packing {
    uint32_t width = 0;
    uint32_t nvars = 0;
    uint64_t q = 0;

    bool alive(uint64_t key) const {
        uint64_t mask = (uint64_t(1) << width) - 1;
        for (uint32_t i = 0; i < nvars; ++i)
            if (((key >> (width * i)) & mask) >= q) return false;
        return true;
    }
    uint64_t pack(const ExpVec& m) const {
        uint64_t key = 0;
        for (uint32_t i = 0; i < nvars; ++i) key |= uint64_t(m.e[i]) << (width * i);
        return key;
    }
};

std::optional<Packing> make_packing(const Ring& R, const std::vector<Poly>& gens, uint64_t q) {
    uint32_t maxexp = 0;
    for (const auto& g : gens)
        for (const auto& t : g.t)
            for (auto x : t.m.e) maxexp = std::max(maxexp, x);
    uint64_t top = q - 1 + maxexp;
    uint32_t w = std::bit_width(top);
    if (w * R.nvars() > 64) return std::nullopt;
    return Packing{w, uint32_t(R.nvars()), q};
}

void p_normalize(const Field& F, PPoly& f) {
    std::sort(f.begin(), f.end(), [](const PTerm& a, const PTerm& b) { return a.first > b.first; });
    if (f.empty()) return;
    FF inv = F.inv(f[0].second);
    for (auto& t : f) t.second = F.mul(t.second, inv);
}

PPoly p_pack_poly(const Field& F, const Packing& pk, const Poly& f) {
    PPoly out;
    for (const auto& t : f.t) {
        uint64_t key = pk.pack(t.m);
        if (pk.alive(key)) out.emplace_back(key, t.c);
    }
    p_normalize(F, out);
    return out;
}

PPoly p_mul_trunc(const Field& F, const Packing& pk, const PPoly& a, const PPoly& b) {
    std::unordered_map<uint64_t, FF> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            uint64_t k = ka + kb; // per-variable sums stay inside their fields
            if (!pk.alive(k)) continue;
            auto it = acc.try_emplace(k, F.zero()).first;
            it->second = F.add(it->second, F.mul(ca, cb));
        }
    PPoly out;
    for (const auto& [k, c] : acc)
        if (!F.is_zero(c)) out.emplace_back(k, c);
    p_normalize(F, out);
    return out;
}

uint64_t last_alive_packed(const Ring& R, const std::vector<Poly>& gens, const Packing& pk,
                           uint64_t r_stop, const NuCaps& caps) {
    std::vector<PPoly> packed_gens;
    for (const auto& g : gens) {
        PPoly pg;
        for (const auto& t : g.t) pg.emplace_back(pk.pack(t.m), t.c);
        p_normalize(R.F, pg);
        packed_gens.push_back(std::move(pg));
    }
    std::set<PPoly> level;
    for (const auto& g : gens) {
        PPoly pg = p_pack_poly(R.F, pk, g);
        if (!pg.empty()) level.insert(std::move(pg));
    }
    uint64_t r = 0;
    while (!level.empty()) {
        ++r;
        if (r >= r_stop) return r;
        std::set<PPoly> next;
        uint64_t terms = 0;
        for (const auto& a : level)
            for (const auto& g : packed_gens) {
                PPoly prod = p_mul_trunc(R.F, pk, a, g);
                if (prod.empty()) continue;
                auto [it, fresh] = next.insert(std::move(prod));
                if (fresh) {
                    terms += it->size();
                    if (terms > caps.max_terms)
                        throw ResourceCapError("term cap exceeded in Frobenius level");
                }
            }
        level = std::move(next);
    }
    return r;
}

// ---- generic fallback on Poly values ----

struct PolyLess {
    bool operator()(const Poly& a, const Poly& b) const {
        if (a.t.size() != b.t.size()) return a.t.size() < b.t.size();
        for (size_t i = 0; i < a.t.size(); ++i) {
            if (a.t[i].m.e != b.t[i].m.e) return a.t[i].m.e < b.t[i].m.e;
            if (a.t[i].c != b.t[i].c) return a.t[i].c < b.t[i].c;
        }
        return false;
    }
};

uint64_t last_alive_generic(const Ring& R, const std::vector<Poly>& gens, uint64_t q,
                            uint64_t r_stop, const NuCaps& caps) {
    std::vector<Poly> tgens;
    for (const auto& g : gens) tgens.push_back(truncate_bracket(g, q));
    std::set<Poly, PolyLess> level;
    for (const auto& g : tgens)
        if (!g.is_zero()) level.insert(poly_monic(R, g));
    uint64_t r = 0;
    while (!level.empty()) {
        ++r;
        if (r >= r_stop) return r;
        std::set<Poly, PolyLess> next;
        uint64_t terms = 0;
        for (const auto& a : level)
            for (const auto& g : tgens) {
                if (g.is_zero()) continue;
                Poly prod = truncate_bracket(poly_mul(R, a, g, caps.max_terms), q);
                if (prod.is_zero()) continue;
                auto [it, fresh] = next.insert(poly_monic(R, prod));
                if (fresh) {
                    terms += it->t.size();
                    if (terms > caps.max_terms)
                        throw ResourceCapError("term cap exceeded in Frobenius level");
                }
            }
        level = std::move(next);
    }
    return r;
}

uint64_t last_alive(const Ring& R, const std::vector<Poly>& gens, uint64_t q, uint64_t r_stop,
                    const NuCaps& caps) {
    if (auto pk = make_packing(R, gens, q)) return last_alive_packed(R, gens, *pk, r_stop, caps);
    return last_alive_generic(R, gens, q, r_stop, caps);
}

uint64_t sharp_level(const Rat& c, uint64_t q) {
    Int r = rat_ceil(c * Rat(long(q - 1)));
    if (r < 0) throw DomainError("threshold candidate must be positive");
    if (!r.fits_ulong_p()) throw ResourceCapError("sharp test level out of range");
    return r.get_ui();
}

std::vector<std::vector<FF>> forms_matrix(const Ring& R, const std::vector<Poly>& forms) {
    if (forms.empty()) throw DomainError("at least one linear form required");
    std::vector<std::vector<FF>> A;
    for (const auto& f : forms) {
        if (f.is_zero() || poly_deg(f) != 1 || !is_homogeneous(f))
            throw DomainError("forms must be homogeneous of degree 1");
        std::vector<FF> row(R.nvars(), R.F.zero());
        for (const auto& t : f.t) {
            for (size_t i = 0; i < R.nvars(); ++i)
                if (t.m.e[i]) row[i] = t.c;
        }
        A.push_back(std::move(row));
    }
    return A;
}

MonomialIdeal colon_part(uint32_t nvars, size_t nforms, uint64_t q) {
    std::vector<ExpVec> gens;
    for (size_t i = 0; i < nforms; ++i) {
        std::vector<uint32_t> e(nvars, 0);
        e[i] = uint32_t(q);
        gens.push_back(ExpVec::of(std::move(e)));
    }
    std::vector<uint32_t> prod(nvars, 0);
    for (size_t i = 0; i < nforms; ++i) prod[i] = uint32_t(q - 1);
    gens.push_back(ExpVec::of(std::move(prod)));
    return monomial_ideal(nvars, std::move(gens));
}

// Rows of `have` extended by rows of `candidates` kept greedy-independent.
std::vector<std::vector<FF>> extend_rows(const Field& F, std::vector<std::vector<FF>> have,
                                         const std::vector<std::vector<FF>>& candidates,
                                         size_t target, std::vector<std::vector<FF>>* added) {
    for (const auto& row : candidates) {
        if (have.size() == target) break;
        have.push_back(row);
        if (f_rank(F, have) != have.size()) {
            have.pop_back();
        } else if (added) {
            added->push_back(row);
        }
    }
    if (have.size() != target) throw DomainError("forms do not span the expected space");
    return have;
}

} // namespace

std::vector<Poly> bracket_power(const Ring& R, const std::vector<Poly>& gens, uint64_t q) {
    if (!is_power_of(R.F.p(), q)) throw DomainError("q must be a power of the characteristic");
    std::vector<Poly> out;
    for (const auto& g : gens) out.push_back(poly_pow(R, g, q));
    return out;
}

bool in_frobenius_max(const Poly& f, uint64_t q) {
    return truncate_bracket(f, q).is_zero();
}

uint64_t nu(const Ring& R, const std::vector<Poly>& gens, uint32_t e, const NuCaps& caps) {
    auto G = validated_generators(R, gens);
    uint64_t p = R.F.p();
    uint64_t prev = 0, result = 0;
    for (uint32_t level = 1; level <= e; ++level) {
        uint64_t q = checked_q(p, level);
        uint64_t cap_r = uint64_t(R.nvars()) * (q - 1) + 1;
        uint64_t v = last_alive(R, G, q, cap_r + 1, caps);
        if (v > cap_r) throw std::logic_error("Frobenius level exceeded the degree bound");
        if (level > 1 && v < p * prev)
            throw std::logic_error("Frobenius levels must grow at least p-fold");
        prev = v;
        result = v;
    }
    return result;
}

bool sharply_f_pure_at(const Ring& R, const std::vector<Poly>& gens, const Rat& c, uint32_t e,
                       const NuCaps& caps) {
    if (c <= 0) throw DomainError("threshold candidate must be positive");
    auto G = validated_generators(R, gens);
    uint64_t q = checked_q(R.F.p(), e);
    uint64_t r = sharp_level(c, q);
    if (r == 0) return true;
    if (r > uint64_t(R.nvars()) * (q - 1)) return false; // no monomial can survive
    return last_alive(R, G, q, r, caps) >= r;
}

FptBounds fpt_bounds(const Ring& R, const std::vector<Poly>& gens, uint32_t e_max,
                     const NuCaps& caps, const GBCaps& gb_caps) {
    auto G = validated_generators(R, gens);
    uint64_t v = nu(R, G, e_max, caps);
    uint64_t q = checked_q(R.F.p(), e_max);

    std::vector<std::pair<std::string, Rat>> lower_cand;
    lower_cand.emplace_back("nu-limit", rat(Int(v), Int(q)));
    auto gb = buchberger(R, G, lex_order(), gb_caps);
    lower_cand.emplace_back("initial-ideal", monomial_fpt(initial_ideal(R, gb, lex_order())));

    std::vector<std::pair<std::string, Rat>> upper_cand;
    if (G.size() == 1) upper_cand.emplace_back("principal-upper", rat(Int(v + 1), Int(q)));
    std::vector<ExpVec> support;
    for (const auto& g : G)
        for (const auto& t : g.t) support.push_back(t.m);
    upper_cand.emplace_back("monomial-majorant",
                            monomial_fpt(monomial_ideal(uint32_t(R.nvars()), support)));

    FptBounds out;
    out.e_used = e_max;
    out.lower = lower_cand[0].second;
    for (const auto& [tag, val] : lower_cand) out.lower = std::max(out.lower, val);
    for (const auto& [tag, val] : lower_cand)
        if (val == out.lower) out.lower_provenance.push_back(tag);
    Rat up = upper_cand[0].second;
    for (const auto& [tag, val] : upper_cand) up = std::min(up, val);
    for (const auto& [tag, val] : upper_cand)
        if (val == up) out.upper_provenance.push_back(tag);
    out.upper = up;
    if (out.lower > up) throw std::logic_error("threshold bounds crossed");
    return out;
}

ColonIdeal colon_linear_prime(const Ring& R, const std::vector<Poly>& forms, uint64_t q) {
    if (!is_power_of(R.F.p(), q)) throw DomainError("q must be a power of the characteristic");
    if (q > (uint64_t(1) << 20)) throw ResourceCapError("q exceeds 2^20");
    auto A = forms_matrix(R, forms);
    if (f_rank(R.F, A) != A.size()) throw DomainError("forms must be linearly independent");
    ColonIdeal C;
    C.frame = f_complete_to_basis(R.F, A, R.nvars());
    C.part = colon_part(uint32_t(R.nvars()), A.size(), q);
    return C;
}

ColonIdeal two_prime_colon_intersection(const Ring& R, const std::vector<Poly>& forms1,
                                        const std::vector<Poly>& forms2, uint64_t q) {
    if (!is_power_of(R.F.p(), q)) throw DomainError("q must be a power of the characteristic");
    if (q > (uint64_t(1) << 20)) throw ResourceCapError("q exceeds 2^20");
    auto A1 = forms_matrix(R, forms1);
    auto A2 = forms_matrix(R, forms2);
    if (f_rank(R.F, A1) != A1.size() || f_rank(R.F, A2) != A2.size())
        throw DomainError("each prime needs independent forms");
    size_t h = A1.size();
    if (A2.size() != h) throw DomainError("primes must have equal height");
    auto W = f_span_intersection(R.F, A1, A2, R.nvars());
    if (W.size() == h) throw DomainError("primes must be distinct");
    size_t j = h - W.size();

    std::vector<std::vector<FF>> u, v;
    extend_rows(R.F, W, A1, h, &u);
    extend_rows(R.F, W, A2, h, &v);
    std::vector<std::vector<FF>> frame;
    frame.insert(frame.end(), u.begin(), u.end());
    frame.insert(frame.end(), v.begin(), v.end());
    frame.insert(frame.end(), W.begin(), W.end());
    if (f_rank(R.F, frame) != h + j)
        throw std::logic_error("combined frame of distinct equal-height primes must be free");

    ColonIdeal C;
    C.frame = f_complete_to_basis(R.F, frame, R.nvars());
    C.part = colon_part(uint32_t(R.nvars()), h + j, q);
    return C;
}

bool colon_contains(const Ring& R, const ColonIdeal& C, const Poly& f) {
    if (f.is_zero()) return true;
    auto inv = f_inverse(R.F, C.frame);
    if (!inv) throw std::logic_error("colon frame must be invertible");
    Poly g = linear_change(R, f, *inv);
    for (const auto& t : g.t)
        if (!contains(C.part, t.m)) return false;
    return true;
}

bool compatible_containment(const Ring& R, const std::vector<Poly>& gens, const Rat& c,
                            const std::vector<Poly>& forms, uint32_t e, uint64_t product_cap) {
    if (c <= 0) throw DomainError("threshold candidate must be positive");
    auto G = validated_generators(R, gens);
    uint64_t q = checked_q(R.F.p(), e);
    ColonIdeal C = colon_linear_prime(R, forms, q);
    uint64_t r = sharp_level(c, q);
    auto prods = power_products(R, G, r, product_cap);
    for (const auto& f : prods)
        if (!colon_contains(R, C, f)) return false;
    return true;
}

} // namespace fptkit
