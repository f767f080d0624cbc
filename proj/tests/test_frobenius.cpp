#include <doctest.h>

#include "fptkit/errors.hpp"
#include "fptkit/frobenius.hpp"
#include "fptkit/parse.hpp"
#include "oracles.hpp"

#include <random>

using namespace fptkit;

TEST_CASE("bracket powers and Frobenius membership") {
    Ring R = make_ring(FieldCfg{2, 1, {}}, {"x", "y"});
    auto bp = bracket_power(R, parse_ideal(R, "x + y, x y"), 4);
    REQUIRE(bp.size() == 2);
    CHECK(poly_eq(bp[0], parse_poly(R, "x^4 + y^4")));
    CHECK(poly_eq(bp[1], parse_poly(R, "x^4 y^4")));
    CHECK(in_frobenius_max(parse_poly(R, "x^2 y + x y^2"), 2));
    CHECK_FALSE(in_frobenius_max(parse_poly(R, "x^2 y + x y"), 2));
    // the 11-variable sharp example: f survives level 4
    std::vector<std::string> names{"x1", "x2", "x3", "x4", "y1", "y2",
                                   "y3", "y4", "y5", "y6", "y7"};
    Ring S = make_ring(FieldCfg{2, 1, {}}, names);
    Poly g = parse_poly(
        S, "y1 y2 y3 y4 y5 y6 y7 (x1^5 + x2^5 + x3^5 + x4^5) + (x1 x2 x3 x4)^3");
    CHECK_FALSE(in_frobenius_max(g, 4));
    CHECK(in_frobenius_max(g, 2));
}

TEST_CASE("nu levels on pinned ideals") {
    Ring R = make_ring(FieldCfg{2, 1, {}}, {"x", "y", "z"});
    auto fermat = parse_ideal(R, "x^3 + y^3 + z^3");
    CHECK(nu(R, fermat, 1) == 0);
    CHECK(nu(R, fermat, 2) == 1);
    CHECK(nu(R, fermat, 3) == 3);
    CHECK(nu(R, fermat, 4) == 7);
    Ring S = make_ring(FieldCfg{5, 1, {}}, {"x", "y"});
    CHECK(nu(S, parse_ideal(S, "x^2, y^2"), 1) == 4);
    Ring T = make_ring(FieldCfg{5, 1, {}}, {"x", "y", "z"});
    CHECK(nu(T, parse_ideal(T, "x, y, z"), 1) == 12); // 3(p-1)
    CHECK(nu(T, parse_ideal(T, "x^2, y z"), 1) == 6);
    CHECK_THROWS_AS(nu(R, parse_ideal(R, "x + 1"), 1), DomainError);
}

TEST_CASE("nu agrees with direct product expansion") {
    std::mt19937_64 rng(13);
    for (uint32_t p : {2u, 3u, 5u}) {
        Ring R = make_ring(FieldCfg{p, 1, {}}, {"x", "y"});
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<Poly> gens;
            gens.push_back(oracle::rand_homogeneous(R, rng, 1 + uint32_t(rng() % 3)));
            if (rng() % 2) gens.push_back(oracle::rand_homogeneous(R, rng, 2));
            for (uint32_t e = 1; e <= 2; ++e)
                CHECK(nu(R, gens, e) == oracle::nu_direct(R, gens, e));
        }
    }
}

TEST_CASE("sharp containment probes") {
    Ring R = make_ring(FieldCfg{2, 1, {}}, {"x", "y", "z"});
    auto fermat = parse_ideal(R, "x^3 + y^3 + z^3");
    for (uint32_t e : {2u, 3u, 4u}) CHECK_FALSE(sharply_f_pure_at(R, fermat, rat(1, 2), e));
    Ring S = make_ring(FieldCfg{2, 1, {}}, {"x", "y"});
    CHECK(sharply_f_pure_at(S, parse_ideal(S, "x y"), rat(1), 1));
    CHECK(sharply_f_pure_at(S, parse_ideal(S, "x"), rat(1), 1));
    CHECK_FALSE(sharply_f_pure_at(S, parse_ideal(S, "x^2"), rat(1), 1));
}

TEST_CASE("certified threshold bounds") {
    Ring R = make_ring(FieldCfg{2, 1, {}}, {"x", "y", "z"});
    auto b = fpt_bounds(R, parse_ideal(R, "x^3 + y^3 + z^3"), 4);
    CHECK(b.lower == rat(7, 16));
    REQUIRE(b.upper.has_value());
    CHECK(*b.upper == rat(1, 2));
    CHECK(b.e_used == 4);
    CHECK(b.lower_provenance == std::vector<std::string>{"nu-limit"});
    CHECK(b.upper_provenance == std::vector<std::string>{"principal-upper"});
    // monomial support majorant pins a two-generator ideal exactly
    Ring S = make_ring(FieldCfg{5, 1, {}}, {"x", "y", "z"});
    auto b2 = fpt_bounds(S, parse_ideal(S, "x^2, y z"), 1);
    CHECK(b2.lower == rat(3, 2));
    REQUIRE(b2.upper.has_value());
    CHECK(*b2.upper == rat(3, 2));
    CHECK(b2.lower_provenance == std::vector<std::string>{"initial-ideal"});
    CHECK(b2.upper_provenance == std::vector<std::string>{"monomial-majorant"});
    // bounds bracket the limit: lower <= upper always on a small corpus
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<Poly> gens{oracle::rand_homogeneous(S, rng, 1 + uint32_t(rng() % 2))};
        auto bb = fpt_bounds(S, gens, 1);
        REQUIRE(bb.upper.has_value());
        CHECK(bb.lower <= *bb.upper);
    }
}

TEST_CASE("colon of a linear prime") {
    Ring R = make_ring(FieldCfg{2, 1, {}}, {"x", "y"});
    ColonIdeal C = colon_linear_prime(R, parse_ideal(R, "x"), 4);
    CHECK(C.part.gens.size() == 1);
    CHECK(C.part.gens[0].e[0] == 3);
    ColonIdeal C2 = colon_linear_prime(R, parse_ideal(R, "x, y"), 2);
    CHECK(ideal_eq(C2.part,
                   monomial_ideal(2, {ExpVec::of({2, 0}), ExpVec::of({1, 1}), ExpVec::of({0, 2})})));
    // membership through the frame: (x+y)^3 vs q = 4 on the prime (x+y)
    Ring S = make_ring(FieldCfg{2, 1, {}}, {"x", "y"});
    ColonIdeal C3 = colon_linear_prime(S, parse_ideal(S, "x + y"), 4);
    CHECK(colon_contains(S, C3, parse_poly(S, "(x+y)^3")));
    CHECK_FALSE(colon_contains(S, C3, parse_poly(S, "(x+y)^2")));
    CHECK(colon_contains(S, C3, parse_poly(S, "x^4 + x^3 y + x^2 y^2 + x y^3")));
    CHECK_THROWS_AS(colon_linear_prime(R, parse_ideal(R, "x"), 3), DomainError);
    CHECK_THROWS_AS(colon_linear_prime(R, parse_ideal(R, "x + 1"), 2), DomainError);
}

TEST_CASE("colon membership matches degreewise linear algebra") {
    // g in (P^[q] : P) iff g * l in P^[q] for every form l in P
    Ring R = make_ring(FieldCfg{5, 1, {}}, {"x", "y", "z"});
    std::mt19937_64 rng(23);
    uint64_t q = 5;
    auto forms = parse_ideal(R, "x + 2 y, z");
    ColonIdeal C = colon_linear_prime(R, forms, q);
    std::vector<Poly> bracket_gens;
    for (const auto& l : forms) bracket_gens.push_back(poly_pow(R, l, q));
    for (int trial = 0; trial < 40; ++trial) {
        Poly g = oracle::rand_homogeneous(R, rng, 5 + uint32_t(rng() % 3));
        bool lhs = colon_contains(R, C, g);
        bool rhs = true;
        for (const auto& l : forms)
            if (!oracle::in_ideal_piece(R, poly_mul(R, g, l), bracket_gens)) rhs = false;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("two prime colon intersections") {
    Ring R = make_ring(FieldCfg{2, 1, {}}, {"x", "y"});
    ColonIdeal C = two_prime_colon_intersection(R, parse_ideal(R, "x"), parse_ideal(R, "y"), 2);
    CHECK(ideal_eq(C.part,
                   monomial_ideal(2, {ExpVec::of({2, 0}), ExpVec::of({1, 1}), ExpVec::of({0, 2})})));
    Ring S = make_ring(FieldCfg{2, 1, {}}, {"x", "y", "w"});
    ColonIdeal C2 =
        two_prime_colon_intersection(S, parse_ideal(S, "x, w"), parse_ideal(S, "y, w"), 2);
    CHECK(ideal_eq(C2.part, monomial_ideal(3, {ExpVec::of({2, 0, 0}), ExpVec::of({0, 2, 0}),
                                               ExpVec::of({0, 0, 2}), ExpVec::of({1, 1, 1})})));
    // the shared form w stays a coordinate of the frame
    CHECK(colon_contains(S, C2, parse_poly(S, "x y w")));
    CHECK_FALSE(colon_contains(S, C2, parse_poly(S, "x y")));
}

TEST_CASE("compatible containment certificates") {
    Ring R = make_ring(FieldCfg{2, 1, {}}, {"x"});
    CHECK(compatible_containment(R, parse_ideal(R, "x^2"), rat(1, 2), parse_ideal(R, "x"), 2));
    std::vector<std::string> names{"x1", "x2", "x3", "x4", "y1", "y2",
                                   "y3", "y4", "y5", "y6", "y7"};
    Ring S = make_ring(FieldCfg{2, 1, {}}, names);
    Poly f = parse_poly(
        S, "y1 y2 y3 y4 y5 y6 y7 (x1^5 + x2^5 + x3^5 + x4^5) + (x1 x2 x3 x4)^3");
    CHECK(compatible_containment(S, {f}, rat(1, 3), parse_ideal(S, "x1, x2, x3, x4"), 2));
}
