#pragma once

#include "fptkit/groebner.hpp"
#include "fptkit/monomial.hpp"
#include "fptkit/poly.hpp"
#include "fptkit/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fptkit {

struct NuCaps {
    uint64_t max_terms = 10000000; // total terms held by one product level
};

// Generator q-th powers. q must be a power of the ring characteristic.
std::vector<Poly> bracket_power(const Ring& R, const std::vector<Poly>& gens, uint64_t q);

// True iff every monomial of f has some exponent >= q (so f lies in the
// Frobenius power of the maximal ideal). Zero counts as inside.
bool in_frobenius_max(const Poly& f, uint64_t q);

// nu(p^e) = largest r such that some r-fold product of generators keeps a
// monomial with all exponents below p^e. Homogeneous generators inside the
// maximal ideal. Every level e' <= e is computed and the p-fold growth
// inequality between consecutive levels is asserted.
uint64_t nu(const Ring& R, const std::vector<Poly>& gens, uint32_t e, const NuCaps& caps = {});

// Single-level sharp test: the ceil(c (p^e - 1))-th power survives truncation.
bool sharply_f_pure_at(const Ring& R, const std::vector<Poly>& gens, const Rat& c, uint32_t e,
                       const NuCaps& caps = {});

struct FptBounds {
    Rat lower;
    std::optional<Rat> upper;
    uint32_t e_used = 0;
    std::vector<std::string> lower_provenance; // nu-limit, initial-ideal
    std::vector<std::string> upper_provenance; // principal-upper, monomial-majorant
};

// lower = max(nu(p^e_max)/p^e_max, threshold of the lex initial ideal);
// upper = min((nu+1)/p^e_max for principal ideals, threshold of the ideal
// generated by every monomial appearing in the generators). Tags name the
// bounds attained.
FptBounds fpt_bounds(const Ring& R, const std::vector<Poly>& gens, uint32_t e_max,
                     const NuCaps& caps = {}, const GBCaps& gb_caps = {});

// Colon of a Frobenius power of a linear prime, as a coordinate frame (rows
// are the forms completed to a basis) plus a monomial ideal in the frame
// coordinates. Membership: rewrite in frame coordinates, check each monomial.
struct ColonIdeal {
    std::vector<std::vector<FF>> frame;
    MonomialIdeal part;
};

ColonIdeal colon_linear_prime(const Ring& R, const std::vector<Poly>& forms, uint64_t q);

// Formula ideal p1^[q] + p2^[q] + (product of the combined frame forms)^{q-1}
// for two equal-height linear primes with distinct spans. This right-hand
// side contains the intersection of the two colon ideals and agrees with it
// away from the Frobenius power of the maximal ideal, which is what the
// degree comparison consumes.
ColonIdeal two_prime_colon_intersection(const Ring& R, const std::vector<Poly>& forms1,
                                        const std::vector<Poly>& forms2, uint64_t q);

bool colon_contains(const Ring& R, const ColonIdeal& C, const Poly& f);

// Every ceil(c (p^e - 1))-fold product of generators lies in the colon ideal
// of the given linear prime.
bool compatible_containment(const Ring& R, const std::vector<Poly>& gens, const Rat& c,
                            const std::vector<Poly>& forms, uint32_t e,
                            uint64_t product_cap = 200000);

} // namespace fptkit
