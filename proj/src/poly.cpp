#include "fptkit/poly.hpp"
#include "fptkit/linalg.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace fptkit {

namespace {
constexpr uint32_t kExpLimit = 1u << 31;
} // namespace

ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
    ExpVec r;
    r.e.resize(a.e.size());
    for (size_t i = 0; i < a.e.size(); ++i) {
        uint64_t s = uint64_t(a.e[i]) + b.e[i];
        if (s >= kExpLimit) throw ResourceCapError("exponent overflow in monomial product");
        r.e[i] = uint32_t(s);
    }
    r.deg = a.deg + b.deg;
    return r;
}

ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
    ExpVec r;
    r.e.resize(a.e.size());
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] - b.e[i];
    r.deg = a.deg - b.deg;
    return r;
}

ExpVec exp_scale(const ExpVec& a, uint64_t k) {
    ExpVec r;
    r.e.resize(a.e.size());
    for (size_t i = 0; i < a.e.size(); ++i) {
        uint64_t s = uint64_t(a.e[i]) * k;
        if (s >= kExpLimit) throw ResourceCapError("exponent overflow in monomial power");
        r.e[i] = uint32_t(s);
    }
    r.deg = a.deg * k;
    return r;
}

ExpVec exp_lcm(const ExpVec& a, const ExpVec& b) {
    ExpVec r;
    r.e.resize(a.e.size());
    r.deg = 0;
    for (size_t i = 0; i < a.e.size(); ++i) {
        r.e[i] = std::max(a.e[i], b.e[i]);
        r.deg += r.e[i];
    }
    return r;
}

bool exp_divides(const ExpVec& a, const ExpVec& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

bool lex_greater(const ExpVec& a, const ExpVec& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
}

bool MonomialOrder::greater(const ExpVec& a, const ExpVec& b) const {
    size_t n = a.e.size();
    auto at = [&](size_t k) { return perm.empty() ? k : size_t(perm[k]); };
    if (kind == OrderKind::Lex) {
        for (size_t k = 0; k < n; ++k) {
            uint32_t ea = a.e[at(k)], eb = b.e[at(k)];
            if (ea != eb) return ea > eb;
        }
        return false;
    }
    if (a.deg != b.deg) return a.deg > b.deg;
    for (size_t k = n; k-- > 0;) {
        uint32_t ea = a.e[at(k)], eb = b.e[at(k)];
        if (ea != eb) return ea < eb;
    }
    return false;
}

std::string MonomialOrder::name() const { return kind == OrderKind::Lex ? "lex" : "grevlex"; }

MonomialOrder lex_order() { return MonomialOrder{OrderKind::Lex, {}}; }
MonomialOrder grevlex_order() { return MonomialOrder{OrderKind::Grevlex, {}}; }

int Ring::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return int(i);
    return -1;
}

Ring make_ring(const FieldCfg& cfg, std::vector<std::string> vars) {
    if (vars.empty()) throw DomainError("ring needs at least one variable");
    for (const auto& v : vars) {
        if (v.empty() || !(std::isalpha((unsigned char)v[0])))
            throw DomainError("variable name must start with a letter: " + v);
        for (char ch : v)
            if (!std::isalnum((unsigned char)ch) && ch != '_')
                throw DomainError("invalid character in variable name: " + v);
    }
    auto sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DomainError("duplicate variable name");
    return Ring{Field(cfg), std::move(vars)};
}

Poly poly_from_terms(const Ring& R, std::vector<Term> terms) {
    for (auto& t : terms)
        if (t.m.e.size() != R.nvars()) throw DomainError("term arity does not match ring");
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return lex_greater(a.m, b.m); });
    Poly f;
    for (auto& t : terms) {
        if (!f.t.empty() && f.t.back().m == t.m) {
            f.t.back().c = R.F.add(f.t.back().c, t.c);
            if (R.F.is_zero(f.t.back().c)) f.t.pop_back();
        } else if (!R.F.is_zero(t.c)) {
            f.t.push_back(std::move(t));
        }
    }
    return f;
}

Poly poly_const(const Ring& R, const FF& c) {
    if (R.F.is_zero(c)) return {};
    Poly f;
    f.t.push_back({ExpVec::of(std::vector<uint32_t>(R.nvars(), 0)), c});
    return f;
}

Poly poly_var(const Ring& R, size_t i, uint32_t exp) {
    std::vector<uint32_t> e(R.nvars(), 0);
    e[i] = exp;
    Poly f;
    f.t.push_back({ExpVec::of(std::move(e)), R.F.one()});
    return f;
}

Poly poly_monomial(const Ring& R, ExpVec m, const FF& c) {
    if (R.F.is_zero(c)) return {};
    if (m.e.size() != R.nvars()) throw DomainError("monomial arity does not match ring");
    Poly f;
    f.t.push_back({std::move(m), c});
    return f;
}

Poly poly_add(const Ring& R, const Poly& a, const Poly& b) {
    Poly r;
    r.t.reserve(a.t.size() + b.t.size());
    size_t i = 0, j = 0;
    while (i < a.t.size() || j < b.t.size()) {
        if (j == b.t.size() || (i < a.t.size() && lex_greater(a.t[i].m, b.t[j].m))) {
            r.t.push_back(a.t[i++]);
        } else if (i == a.t.size() || lex_greater(b.t[j].m, a.t[i].m)) {
            r.t.push_back(b.t[j++]);
        } else {
            FF c = R.F.add(a.t[i].c, b.t[j].c);
            if (!R.F.is_zero(c)) r.t.push_back({a.t[i].m, c});
            ++i;
            ++j;
        }
    }
    return r;
}

Poly poly_neg(const Ring& R, const Poly& a) {
    Poly r = a;
    for (auto& t : r.t) t.c = R.F.neg(t.c);
    return r;
}

Poly poly_sub(const Ring& R, const Poly& a, const Poly& b) { return poly_add(R, a, poly_neg(R, b)); }

Poly poly_scale(const Ring& R, const Poly& a, const FF& c) {
    if (R.F.is_zero(c)) return {};
    Poly r = a;
    for (auto& t : r.t) t.c = R.F.mul(t.c, c);
    return r;
}

Poly poly_mul(const Ring& R, const Poly& a, const Poly& b, uint64_t term_cap) {
    if (a.is_zero() || b.is_zero()) return {};
    std::unordered_map<ExpVec, FF, ExpHash> acc;
    acc.reserve(a.t.size() + b.t.size());
    for (const auto& ta : a.t)
        for (const auto& tb : b.t) {
            ExpVec m = exp_add(ta.m, tb.m);
            FF c = R.F.mul(ta.c, tb.c);
            auto it = acc.find(m);
            if (it == acc.end()) {
                if (acc.size() >= term_cap)
                    throw ResourceCapError("polynomial product exceeds term cap");
                acc.emplace(std::move(m), c);
            } else {
                it->second = R.F.add(it->second, c);
            }
        }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!R.F.is_zero(c)) terms.push_back({m, c});
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return lex_greater(x.m, y.m); });
    Poly r;
    r.t = std::move(terms);
    return r;
}

Poly poly_pow(const Ring& R, Poly a, uint64_t k, uint64_t term_cap) {
    Poly r = poly_const(R, R.F.one());
    while (k) {
        if (k & 1) r = poly_mul(R, r, a, term_cap);
        k >>= 1;
        if (k) a = poly_mul(R, a, a, term_cap);
    }
    return r;
}

Poly truncate_bracket(const Poly& f, uint64_t q) {
    Poly r;
    for (const auto& t : f.t) {
        bool alive = true;
        for (auto x : t.m.e)
            if (x >= q) {
                alive = false;
                break;
            }
        if (alive) r.t.push_back(t);
    }
    return r;
}

Poly poly_pow_trunc(const Ring& R, const Poly& f, uint64_t r, uint64_t q) {
    if (q < 1) throw DomainError("truncation level must be positive");
    Poly acc = truncate_bracket(poly_const(R, R.F.one()), q);
    Poly base = truncate_bracket(f, q);
    for (uint64_t i = 0; i < r; ++i) {
        acc = truncate_bracket(poly_mul(R, acc, base), q);
        if (acc.is_zero()) return acc;
    }
    return acc;
}

Term initial_term(const Ring& R, const Poly& f, const MonomialOrder& ord) {
    (void)R;
    if (f.is_zero()) throw DomainError("initial term of the zero polynomial");
    size_t best = 0;
    for (size_t i = 1; i < f.t.size(); ++i)
        if (ord.greater(f.t[i].m, f.t[best].m)) best = i;
    return f.t[best];
}

uint64_t poly_deg(const Poly& f) {
    uint64_t d = 0;
    for (const auto& t : f.t) d = std::max(d, t.m.deg);
    return d;
}

bool is_homogeneous(const Poly& f) {
    for (const auto& t : f.t)
        if (t.m.deg != f.t[0].m.deg) return false;
    return true;
}

Poly poly_monic(const Ring& R, const Poly& f) {
    if (f.is_zero()) return f;
    return poly_scale(R, f, R.F.inv(f.t[0].c));
}

bool poly_eq(const Poly& a, const Poly& b) {
    if (a.t.size() != b.t.size()) return false;
    for (size_t i = 0; i < a.t.size(); ++i)
        if (!(a.t[i].m == b.t[i].m) || a.t[i].c != b.t[i].c) return false;
    return true;
}

FF poly_eval(const Ring& R, const Poly& f, const std::vector<FF>& point) {
    if (point.size() != R.nvars()) throw DomainError("evaluation point arity mismatch");
    FF acc = R.F.zero();
    for (const auto& t : f.t) {
        FF v = t.c;
        for (size_t i = 0; i < point.size(); ++i)
            if (t.m.e[i]) v = R.F.mul(v, R.F.pow(point[i], t.m.e[i]));
        acc = R.F.add(acc, v);
    }
    return acc;
}

Poly poly_derivative(const Ring& R, const Poly& f, size_t i) {
    if (i >= R.nvars()) throw DomainError("variable index out of range");
    std::vector<Term> terms;
    for (const auto& t : f.t) {
        if (t.m.e[i] == 0) continue;
        FF c = R.F.mul(t.c, R.F.from_int(static_cast<long long>(t.m.e[i])));
        if (R.F.is_zero(c)) continue;
        ExpVec m = t.m;
        m.e[i] -= 1;
        m.deg -= 1;
        terms.push_back({std::move(m), c});
    }
    return poly_from_terms(R, std::move(terms));
}

Poly substitute_images(const Ring& src, const Ring& dst, const Poly& f,
                       const std::vector<Poly>& images, uint64_t term_cap) {
    if (images.size() != src.nvars()) throw DomainError("one image per source variable required");
    // Memoized powers of each image within this call.
    std::vector<std::map<uint32_t, Poly>> powers(images.size());
    auto image_pow = [&](size_t i, uint32_t e) -> const Poly& {
        auto it = powers[i].find(e);
        if (it != powers[i].end()) return it->second;
        Poly p = poly_pow(dst, images[i], e, term_cap);
        return powers[i].emplace(e, std::move(p)).first->second;
    };
    Poly out;
    for (const auto& t : f.t) {
        Poly term = poly_const(dst, t.c);
        for (size_t i = 0; i < images.size(); ++i)
            if (t.m.e[i]) term = poly_mul(dst, term, image_pow(i, t.m.e[i]), term_cap);
        out = poly_add(dst, out, term);
    }
    return out;
}

Poly linear_change(const Ring& R, const Poly& f, const std::vector<std::vector<FF>>& M) {
    size_t n = R.nvars();
    if (M.size() != n) throw DomainError("change of coordinates must be a square matrix");
    for (const auto& row : M)
        if (row.size() != n) throw DomainError("change of coordinates must be a square matrix");
    if (f_rank(R.F, M) != n) throw DomainError("change of coordinates is singular");
    std::vector<Poly> images(n);
    for (size_t i = 0; i < n; ++i) {
        Poly img;
        for (size_t j = 0; j < n; ++j)
            if (!R.F.is_zero(M[i][j]))
                img = poly_add(R, img, poly_scale(R, poly_var(R, j), M[i][j]));
        images[i] = img;
    }
    return substitute_images(R, R, f, images);
}

std::vector<Poly> power_products(const Ring& R, const std::vector<Poly>& gens, uint64_t s,
                                 uint64_t product_cap, uint64_t term_cap) {
    if (gens.empty()) throw DomainError("power of an ideal with no generators");
    if (s == 0) return {poly_const(R, R.F.one())};
    size_t g = gens.size();
    // Number of multisets is C(s + g - 1, g - 1).
    Int count;
    mpz_bin_uiui(count.get_mpz_t(), static_cast<unsigned long>(s + g - 1),
                 static_cast<unsigned long>(g - 1));
    if (count > Int(static_cast<unsigned long>(product_cap)))
        throw ResourceCapError("too many generator products");

    std::vector<Poly> out;
    std::vector<uint64_t> mult(g, 0); // multiset as multiplicities summing to s
    mult[0] = s;
    while (true) {
        Poly prod = poly_const(R, R.F.one());
        for (size_t i = 0; i < g && !prod.is_zero(); ++i)
            if (mult[i]) prod = poly_mul(R, prod, poly_pow(R, gens[i], mult[i], term_cap), term_cap);
        if (!prod.is_zero()) out.push_back(std::move(prod));
        // Next composition of s into g parts, colex style.
        if (g == 1) break;
        size_t i = 0;
        while (i + 1 < g && mult[i] == 0) ++i;
        if (i + 1 == g) break;
        uint64_t head = mult[i];
        mult[i] = 0;
        mult[0] = head - 1;
        mult[i + 1] += 1;
    }
    return out;
}

std::string to_string(const Ring& R, const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (size_t k = 0; k < f.t.size(); ++k) {
        const Term& t = f.t[k];
        if (k) out += " + ";
        std::string mon;
        for (size_t i = 0; i < t.m.e.size(); ++i) {
            if (!t.m.e[i]) continue;
            if (!mon.empty()) mon += "*";
            mon += R.vars[i];
            if (t.m.e[i] > 1) mon += "^" + std::to_string(t.m.e[i]);
        }
        bool unit = (t.c == R.F.one());
        if (mon.empty()) {
            out += R.F.to_string(t.c);
        } else if (unit) {
            out += mon;
        } else {
            out += R.F.to_string(t.c) + "*" + mon;
        }
    }
    return out;
}

} // namespace fptkit
