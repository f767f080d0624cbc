#pragma once

#include "fptkit/poly.hpp"
#include "fptkit/polytope.hpp"
#include "fptkit/rational.hpp"

#include <optional>
#include <vector>

namespace fptkit {

// Monomial ideal with a minimal generating set, sorted by degree then
// ascending lex. No generators means the zero ideal.
struct MonomialIdeal {
    uint32_t nvars = 0;
    std::vector<ExpVec> gens;

    bool is_zero() const { return gens.empty(); }
    bool is_unit() const { return gens.size() == 1 && gens[0].deg == 0; }
};

MonomialIdeal monomial_ideal(uint32_t nvars, std::vector<ExpVec> gens);

bool contains(const MonomialIdeal& a, const ExpVec& m);
bool ideal_subset(const MonomialIdeal& a, const MonomialIdeal& b); // a subset of b
bool ideal_eq(const MonomialIdeal& a, const MonomialIdeal& b);

MonomialIdeal monomial_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal monomial_power(const MonomialIdeal& a, uint64_t k);
MonomialIdeal monomial_bracket(const MonomialIdeal& a, uint64_t q);

// Generators as points plus the coordinate rays. Zero or unit ideal rejected.
QPolytope newton_polytope(const MonomialIdeal& a);

// 1 / min{ t : t(1,...,1) lies in the Newton polyhedron }. Exact, any nvars.
Rat monomial_fpt(const MonomialIdeal& a);

// Monomials whose exponent vector lies in the Newton polyhedron.
MonomialIdeal integral_closure(const MonomialIdeal& a);

// Hilbert-Samuel multiplicity of an m-primary monomial ideal: n! times the
// volume of the staircase complement. Requires a pure power of every variable
// and nvars <= 4.
Int monomial_multiplicity(const MonomialIdeal& a);

// Smallest number of variables covering the support of every generator.
uint32_t monomial_height(const MonomialIdeal& a);

// Number of degree-t monomials outside the ideal.
uint64_t standard_count(const MonomialIdeal& a, uint64_t t);

// Convex hull of the exponent vectors of the degree-t monomials inside the
// ideal. May be empty.
QPolytope gamma_t(const MonomialIdeal& a, uint64_t t);

// Lower-bound certificate: if the degree-t2 slice is full-dimensional in the
// degree hyperplane and the scaled all-ones point is strictly inside every
// facet, the threshold exceeds nvars / t2. Requires t2 > t and a degree-t
// monomial in the ideal.
std::optional<Rat> relint_fpt_bound(const MonomialIdeal& a, uint64_t t, uint64_t t2);

struct LimitingProbeLevel {
    uint64_t s = 0;
    uint64_t t = 0;
    MonomialIdeal a;
    QPolytope scaled_slice; // gamma_t(a, t) shrunk by the level's scale factor
    bool graded_ok = true;  // previous a times itself lands in this level's a
    bool chain_ok = true;   // previous scaled slice contained in this one
};

struct LimitingProbeConfig {
    uint64_t step = 1;
    uint32_t m_max = 2;
    uint64_t t_scale = 1;
    uint64_t product_cap = 200000;
    uint64_t term_cap = 10000000;
};

// Doubling sequence s_m = step * 2^m: initial ideal of the s_m-th power, its
// degree-(t_scale * 2^m) slice scaled by 2^-m, and the gradedness and chain
// inclusions between consecutive levels.
std::vector<LimitingProbeLevel> limiting_probe(const Ring& R, const std::vector<Poly>& gens,
                                               const MonomialOrder& ord,
                                               const LimitingProbeConfig& cfg);

} // namespace fptkit
