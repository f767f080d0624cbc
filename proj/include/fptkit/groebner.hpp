#pragma once

#include "fptkit/monomial.hpp"
#include "fptkit/poly.hpp"

#include <vector>

namespace fptkit {

struct GBCaps {
    uint64_t max_degree = 40;  // largest S-pair lcm degree processed
    uint64_t max_pairs = 1000000;
};

// Reduced Groebner basis: monic, minimal leads, tail-reduced, sorted with the
// largest lead first. Zero generators are dropped; an empty result is the
// zero ideal. Input need not be homogeneous.
std::vector<Poly> buchberger(const Ring& R, const std::vector<Poly>& gens,
                             const MonomialOrder& ord, const GBCaps& caps = {});

// Remainder of full division by the basis, scanning divisors in basis order.
Poly normal_form(const Ring& R, const Poly& f, const std::vector<Poly>& basis,
                 const MonomialOrder& ord);

// Leads of a Groebner basis. Pre: `gb` came from buchberger with this order.
MonomialIdeal initial_ideal(const Ring& R, const std::vector<Poly>& gb,
                            const MonomialOrder& ord);

// Dimension of the degree-t piece of the quotient ring. Homogeneous input.
uint64_t hilbert_value(const Ring& R, const std::vector<Poly>& gens, uint64_t t,
                       const GBCaps& caps = {});

// Height via the flat degeneration to the initial ideal. Homogeneous input,
// proper ideal.
uint32_t height(const Ring& R, const std::vector<Poly>& gens, const GBCaps& caps = {});

} // namespace fptkit
