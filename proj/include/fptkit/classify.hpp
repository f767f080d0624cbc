#pragma once

#include "fptkit/frobenius.hpp"
#include "fptkit/groebner.hpp"
#include "fptkit/linalg.hpp"
#include "fptkit/poly.hpp"
#include "fptkit/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fptkit {

struct EssConfig {
    uint32_t ext_max = 2;          // largest extension degree searched (absolute over F_p)
    uint64_t max_points = 2000000; // projective points enumerated per field
    GBCaps gb{};
};

// One descent step: the field it runs over (absolute degree over the prime
// field; step fields refine each other) and a full-dimension substitution
// x = M y after which the generators are free of their last live variable.
struct EssStep {
    uint32_t s = 1;
    FMat M;
};

struct EssResult {
    uint32_t lower = 0;
    uint32_t upper = 0;
    bool exact = false;
    std::string method; // derivative-span | point-search
    std::vector<EssStep> certificate;
};

// Smallest number of linear forms the ideal can be written in, over the
// algebraic closure. Equigenerated input. Exact below the characteristic via
// the span of iterated derivatives; otherwise a point search with an upper
// bound that is exact only when the no-point case is certified.
EssResult essential_codim(const Ring& R, const std::vector<Poly>& gens,
                          const EssConfig& cfg = {});

// Replay a certificate: embed into each step's field, apply the
// substitutions, and check the final generators use only the first `upper`
// variables. Returns the final ring and generators.
std::pair<Ring, std::vector<Poly>> apply_certificate(const Ring& R,
                                                     const std::vector<Poly>& gens,
                                                     const EssResult& ess);

// Image of the ideal after eliminating the leading variable of the linear
// form ell via ell = 0. The returned ring drops that variable.
std::pair<Ring, std::vector<Poly>> restrict_hyperplane(const Ring& R,
                                                       const std::vector<Poly>& gens,
                                                       const Poly& ell);

struct TheoremACfg {
    EssConfig ess{};
    NuCaps nu{};
    GBCaps gb{};
};

struct TheoremAReport {
    uint32_t h = 0;
    uint64_t d = 0;
    EssResult ess;
    FptBounds bounds;
    std::string verdict; // equality-case | strict-case | inconclusive
    std::optional<MonomialIdeal> closure_witness;
};

// equality-case when the essential codimension is exactly the height (the
// threshold then equals h/d and must sit inside the computed bounds);
// strict-case when the codimension lower bound exceeds the height and the
// threshold lower bound clears h/d; inconclusive otherwise.
TheoremAReport theorem_a_verdict(const Ring& R, const std::vector<Poly>& gens, uint32_t e_max,
                                 const TheoremACfg& cfg = {});

struct PrimeCheck {
    std::vector<Poly> forms;
    uint32_t h = 0;
    bool compatible = false;
    bool degree_inequality = false; // d * r >= h * (q - 1) at the probed level
    bool witness_found = false;     // survivor monomial below q divisible by the head block
};

struct TheoremBReport {
    Rat c;
    uint64_t d = 0;
    uint32_t e_probed = 0;
    bool sharp_probe = false;
    std::vector<PrimeCheck> primes;
    uint32_t h = 0;           // largest height among compatible candidates
    bool bound_holds = false; // c >= h/d over the compatible candidates
    std::string conclusion;   // hypothesis-holds-and-bound-verified | hypothesis-fails | inconclusive
};

// Probes sharpness at e = 1..e_max (first success wins), then checks each
// candidate prime for compatibility, the witness monomial, and the degree
// inequality at the probed level.
TheoremBReport theorem_b_check(const Ring& R, const std::vector<Poly>& gens, const Rat& c,
                               const std::vector<std::vector<Poly>>& candidate_primes,
                               uint32_t e_max, const NuCaps& caps = {},
                               uint64_t product_cap = 200000);

} // namespace fptkit
