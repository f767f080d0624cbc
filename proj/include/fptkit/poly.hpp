#pragma once

#include "fptkit/errors.hpp"
#include "fptkit/field.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fptkit {

// Exponent vector with cached total degree.
struct ExpVec {
    std::vector<uint32_t> e;
    uint64_t deg = 0;

    static ExpVec of(std::vector<uint32_t> v) {
        ExpVec m;
        m.e = std::move(v);
        for (auto x : m.e) m.deg += x;
        return m;
    }
    bool operator==(const ExpVec& o) const { return e == o.e; }
};

ExpVec exp_add(const ExpVec& a, const ExpVec& b);
ExpVec exp_sub(const ExpVec& a, const ExpVec& b); // pre: divides(b, a)
ExpVec exp_scale(const ExpVec& a, uint64_t k);
ExpVec exp_lcm(const ExpVec& a, const ExpVec& b);
bool exp_divides(const ExpVec& a, const ExpVec& b); // x^a | x^b
bool lex_greater(const ExpVec& a, const ExpVec& b);

struct ExpHash {
    size_t operator()(const ExpVec& m) const {
        uint64_t h = 1469598103934665603ull;
        for (auto x : m.e) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return size_t(h);
    }
};

enum class OrderKind { Lex, Grevlex };

// Multiplicative monomial order: lex or graded reverse lex, with an optional
// priority permutation (perm[0] is the most significant variable index).
struct MonomialOrder {
    OrderKind kind = OrderKind::Lex;
    std::vector<uint32_t> perm; // empty: identity

    bool greater(const ExpVec& a, const ExpVec& b) const;
    bool less(const ExpVec& a, const ExpVec& b) const { return greater(b, a); }
    std::string name() const;
};

MonomialOrder lex_order();
MonomialOrder grevlex_order();

struct Ring {
    Field F;
    std::vector<std::string> vars;

    size_t nvars() const { return vars.size(); }
    int var_index(const std::string& name) const;
};

Ring make_ring(const FieldCfg& cfg, std::vector<std::string> vars);

struct Term {
    ExpVec m;
    FF c;
};

// Terms are kept in plain lex-descending monomial order (identity priority),
// with distinct monomials and nonzero coefficients. A MonomialOrder parameter
// affects only operations that take one.
struct Poly {
    std::vector<Term> t;
    bool is_zero() const { return t.empty(); }
};

Poly poly_from_terms(const Ring& R, std::vector<Term> terms);
Poly poly_const(const Ring& R, const FF& c);
Poly poly_var(const Ring& R, size_t i, uint32_t exp = 1);
Poly poly_monomial(const Ring& R, ExpVec m, const FF& c);

Poly poly_add(const Ring& R, const Poly& a, const Poly& b);
Poly poly_sub(const Ring& R, const Poly& a, const Poly& b);
Poly poly_neg(const Ring& R, const Poly& a);
Poly poly_scale(const Ring& R, const Poly& a, const FF& c);
// term_cap: ResourceCapError if the product would exceed this many terms.
Poly poly_mul(const Ring& R, const Poly& a, const Poly& b, uint64_t term_cap = 10000000);
Poly poly_pow(const Ring& R, Poly a, uint64_t k, uint64_t term_cap = 10000000);

// f^r, discarding every monomial with some exponent >= q after each
// multiplication step.
Poly poly_pow_trunc(const Ring& R, const Poly& f, uint64_t r, uint64_t q);
Poly truncate_bracket(const Poly& f, uint64_t q);

Term initial_term(const Ring& R, const Poly& f, const MonomialOrder& ord);
uint64_t poly_deg(const Poly& f); // 0 for the zero polynomial
bool is_homogeneous(const Poly& f);
Poly poly_monic(const Ring& R, const Poly& f);
bool poly_eq(const Poly& a, const Poly& b);

FF poly_eval(const Ring& R, const Poly& f, const std::vector<FF>& point);

// Partial derivative in the i-th variable (exponents reduce into the field).
Poly poly_derivative(const Ring& R, const Poly& f, size_t i);

// g = f(images[0], ..., images[n-1]): substitute an image polynomial in the
// target ring for each source variable.
Poly substitute_images(const Ring& src, const Ring& dst, const Poly& f,
                       const std::vector<Poly>& images, uint64_t term_cap = 10000000);

// g(x) = f(M x); M must be square and invertible over the coefficient field.
Poly linear_change(const Ring& R, const Poly& f, const std::vector<std::vector<FF>>& M);

// All s-fold products of the generators (multisets of size s), zero products
// dropped. product_cap bounds the number of multisets, term_cap each product.
std::vector<Poly> power_products(const Ring& R, const std::vector<Poly>& gens, uint64_t s,
                                 uint64_t product_cap = 200000, uint64_t term_cap = 10000000);

std::string to_string(const Ring& R, const Poly& f);

} // namespace fptkit
