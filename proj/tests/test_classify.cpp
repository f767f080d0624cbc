#include <doctest.h>

#include "fptkit/classify.hpp"
#include "fptkit/errors.hpp"
#include "fptkit/monomial.hpp"
#include "fptkit/parse.hpp"
#include "oracles.hpp"

#include <random>
#include <string>
#include <vector>

using namespace fptkit;

namespace {

bool confined_to_first(const std::vector<Poly>& gens, uint32_t k) {
    for (const auto& g : gens)
        for (const auto& t : g.t)
            for (size_t i = k; i < t.m.e.size(); ++i)
                if (t.m.e[i] != 0) return false;
    return true;
}

FMat random_invertible(const Field& F, std::mt19937_64& rng, uint32_t n) {
    while (true) {
        FMat M(n, std::vector<FF>(n));
        for (auto& row : M)
            for (auto& x : row) x = F.from_int(static_cast<long long>(rng() % F.p()));
        if (f_rank(F, M) == n) return M;
    }
}

} // namespace

TEST_CASE("essential codimension pinned examples") {
    Ring R = make_ring(FieldCfg{5, 1, {}}, {"x", "y"});
    EssResult e1 = essential_codim(R, parse_ideal(R, "x^3"));
    CHECK(e1.lower == 1);
    CHECK(e1.upper == 1);
    CHECK(e1.exact);
    CHECK(e1.method == "derivative-span");

    Ring S = make_ring(FieldCfg{5, 1, {}}, {"x", "y", "z"});
    EssResult e2 = essential_codim(S, parse_ideal(S, "x^2, x y, y^2"));
    CHECK(e2.lower == 2);
    CHECK(e2.upper == 2);
    CHECK(e2.exact);

    // square of a linear form collapses to one variable
    EssResult e3 = essential_codim(S, parse_ideal(S, "(x + y)^2"));
    CHECK(e3.lower == 1);
    CHECK(e3.upper == 1);
    CHECK(e3.exact);

    CHECK_THROWS_AS(essential_codim(S, parse_ideal(S, "x^2, y")), DomainError);
    CHECK_THROWS_AS(essential_codim(S, parse_ideal(S, "x + 1")), DomainError);
}

TEST_CASE("point search certificates replay") {
    // characteristic two quadric: the derivative span cannot decide, the
    // point search must, and its certificate has to replay cleanly
    Ring R = make_ring(FieldCfg{2, 1, {}}, {"x", "y"});
    EssResult ess = essential_codim(R, parse_ideal(R, "(x + y)^2"));
    CHECK(ess.lower == 1);
    CHECK(ess.upper == 1);
    CHECK(ess.exact);
    CHECK(ess.method == "point-search");
    REQUIRE_FALSE(ess.certificate.empty());
    auto [finalR, finalG] = apply_certificate(R, parse_ideal(R, "(x + y)^2"), ess);
    CHECK(confined_to_first(finalG, ess.upper));

    // corrupting a step matrix must be caught, not silently applied
    EssResult bad = ess;
    for (auto& row : bad.certificate[0].M)
        for (auto& x : row) x = finalR.F.zero();
    CHECK_THROWS_AS(apply_certificate(R, parse_ideal(R, "(x + y)^2"), bad), DomainError);

    // no cone point anywhere: the no-descent answer is certified exact
    Ring S = make_ring(FieldCfg{2, 1, {}}, {"x", "y", "z"});
    EssResult fer = essential_codim(S, parse_ideal(S, "x^3 + y^3 + z^3"));
    CHECK(fer.lower == 3);
    CHECK(fer.upper == 3);
    CHECK(fer.exact);
    CHECK(fer.method == "point-search");
    CHECK(fer.certificate.empty());
}

TEST_CASE("codimension bounded by the variables actually used") {
    // ideal written in r variables, hidden by an invertible substitution:
    // the bound comes back at most r, and exactly r with pure powers present
    std::mt19937_64 rng(41);
    Ring R = make_ring(FieldCfg{101, 1, {}}, {"x0", "x1", "x2", "x3"});
    for (uint32_t r = 1; r <= 3; ++r) {
        for (int trial = 0; trial < 4; ++trial) {
            uint32_t d = 2 + uint32_t(rng() % 2);
            std::vector<Poly> gens;
            for (uint32_t i = 0; i < r; ++i) {
                std::vector<uint32_t> ev(4, 0);
                ev[i] = d;
                gens.push_back(poly_monomial(R, ExpVec::of(ev), R.F.one()));
            }
            FMat M = random_invertible(R.F, rng, 4);
            std::vector<Poly> moved;
            for (const auto& g : gens) moved.push_back(linear_change(R, g, M));
            EssResult ess = essential_codim(R, moved);
            CHECK(ess.exact);
            CHECK(ess.upper == r);
        }
    }
}

TEST_CASE("restriction to a hyperplane") {
    Ring R = make_ring(FieldCfg{101, 1, {}}, {"x", "y", "z"});
    auto [S, gens] = restrict_hyperplane(R, parse_ideal(R, "x^2 + y^2 + z^2"),
                                         parse_poly(R, "x + 2 y"));
    CHECK(S.vars == std::vector<std::string>{"y", "z"});
    REQUIRE(gens.size() == 1);
    CHECK(to_string(S, gens[0]) == "5*y^2 + z^2");
    CHECK_THROWS_AS(restrict_hyperplane(R, parse_ideal(R, "x^2"), parse_poly(R, "x^2")),
                    DomainError);
    CHECK_THROWS_AS(restrict_hyperplane(R, parse_ideal(R, "x^2"), parse_poly(R, "0")),
                    DomainError);
}

TEST_CASE("generic hyperplane restriction preserves codimension") {
    // one fixed diagonal cubic with full codimension; most hyperplane cuts
    // keep the codimension at the new variable count
    Ring R = make_ring(FieldCfg{101, 1, {}}, {"x", "y", "z", "w"});
    auto gens = parse_ideal(R, "x^3 + y^3 + z^3 + w^3");
    EssResult base = essential_codim(R, gens);
    REQUIRE(base.exact);
    REQUIRE(base.upper == 4);
    std::mt19937_64 rng(61);
    int agree = 0;
    for (int trial = 0; trial < 50; ++trial) {
        Poly ell = oracle::rand_linear_form(R, rng);
        auto [S, cut] = restrict_hyperplane(R, gens, ell);
        EssResult after = essential_codim(S, cut);
        uint32_t expect = std::min<uint32_t>(uint32_t(S.vars.size()), base.upper);
        if (after.exact && after.upper == expect) ++agree;
    }
    CHECK(agree >= 45);
}

TEST_CASE("threshold equality verdicts pinned") {
    Ring R = make_ring(FieldCfg{5, 1, {}}, {"x", "y"});
    TheoremAReport eq = theorem_a_verdict(R, parse_ideal(R, "x^2, y^2"), 1);
    CHECK(eq.h == 2);
    CHECK(eq.d == 2);
    CHECK(eq.verdict == "equality-case");
    REQUIRE(eq.closure_witness.has_value());
    CHECK(ideal_eq(*eq.closure_witness,
                   monomial_ideal(2, {ExpVec::of({2, 0}), ExpVec::of({1, 1}), ExpVec::of({0, 2})})));

    TheoremAReport st = theorem_a_verdict(R, parse_ideal(R, "x^2, x y"), 1);
    CHECK(st.h == 1);
    CHECK(st.verdict == "strict-case");
    CHECK_FALSE(st.closure_witness.has_value());

    Ring S = make_ring(FieldCfg{5, 1, {}}, {"x", "y", "z"});
    TheoremAReport st2 = theorem_a_verdict(S, parse_ideal(S, "x^2, y z"), 1);
    CHECK(st2.h == 2);
    CHECK(st2.verdict == "strict-case");
}

TEST_CASE("verdict biconditional on quadric monomial ideals") {
    // every equigenerated quadric monomial ideal in three variables: the
    // equality verdict must coincide with threshold == height / degree
    Ring R = make_ring(FieldCfg{5, 1, {}}, {"x", "y", "z"});
    std::vector<ExpVec> quads{ExpVec::of({2, 0, 0}), ExpVec::of({1, 1, 0}),
                              ExpVec::of({1, 0, 1}), ExpVec::of({0, 2, 0}),
                              ExpVec::of({0, 1, 1}), ExpVec::of({0, 0, 2})};
    for (uint32_t mask = 1; mask < 64; ++mask) {
        std::vector<ExpVec> sel;
        std::vector<Poly> gens;
        for (uint32_t i = 0; i < 6; ++i)
            if (mask & (1u << i)) {
                sel.push_back(quads[i]);
                gens.push_back(poly_monomial(R, quads[i], R.F.one()));
            }
        TheoremAReport rep = theorem_a_verdict(R, gens, 1);
        CHECK(rep.verdict != "inconclusive");
        Rat t = monomial_fpt(monomial_ideal(3, sel));
        bool equality = (t == rat(rep.h, 2));
        CHECK((rep.verdict == "equality-case") == equality);
    }
}

TEST_CASE("sharp bound checks pinned") {
    // principal monomial xy sharp at one, compatible with the height one prime
    Ring R = make_ring(FieldCfg{2, 1, {}}, {"x", "y"});
    TheoremBReport xy =
        theorem_b_check(R, parse_ideal(R, "x y"), rat(1), {parse_ideal(R, "x")}, 1);
    CHECK(xy.sharp_probe);
    CHECK(xy.e_probed == 1);
    REQUIRE(xy.primes.size() == 1);
    CHECK(xy.primes[0].compatible);
    CHECK(xy.primes[0].witness_found);
    CHECK(xy.primes[0].degree_inequality);
    CHECK(xy.h == 1);
    CHECK(xy.bound_holds);
    CHECK(xy.conclusion == "hypothesis-holds-and-bound-verified");

    // the diagonal cubic is never sharp at one half
    Ring S = make_ring(FieldCfg{2, 1, {}}, {"x", "y", "z"});
    TheoremBReport fer = theorem_b_check(S, parse_ideal(S, "x^3 + y^3 + z^3"), rat(1, 2),
                                         {parse_ideal(S, "x, y, z")}, 4);
    CHECK_FALSE(fer.sharp_probe);
    CHECK(fer.conclusion == "hypothesis-fails");
}

TEST_CASE("eleven variable sharp example end to end") {
    std::vector<std::string> names{"x1", "x2", "x3", "x4", "y1", "y2",
                                   "y3", "y4", "y5", "y6", "y7"};
    Ring R = make_ring(FieldCfg{2, 1, {}}, names);
    Poly f = parse_poly(
        R, "y1 y2 y3 y4 y5 y6 y7 (x1^5 + x2^5 + x3^5 + x4^5) + (x1 x2 x3 x4)^3");
    TheoremBReport rep =
        theorem_b_check(R, {f}, rat(1, 3), {parse_ideal(R, "x1, x2, x3, x4")}, 2);
    CHECK(rep.d == 12);
    CHECK(rep.sharp_probe);
    CHECK(rep.e_probed == 2);
    REQUIRE(rep.primes.size() == 1);
    CHECK(rep.primes[0].h == 4);
    CHECK(rep.primes[0].compatible);
    CHECK(rep.primes[0].witness_found);
    CHECK(rep.primes[0].degree_inequality);
    CHECK(rep.h == 4);
    CHECK(rep.bound_holds);
    CHECK(rep.conclusion == "hypothesis-holds-and-bound-verified");
    // the bound is attained: c equals height over degree exactly
    CHECK(rat(1, 3) == rat(rep.h, rep.d));
}
