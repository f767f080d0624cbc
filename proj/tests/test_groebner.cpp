#include <doctest.h>

#include "fptkit/errors.hpp"
#include "fptkit/groebner.hpp"
#include "fptkit/parse.hpp"
#include "oracles.hpp"

#include <random>

using namespace fptkit;

TEST_CASE("reduced basis on pinned inputs") {
    Ring R = make_ring(FieldCfg{5, 1, {}}, {"x", "y"});
    auto gb = buchberger(R, parse_ideal(R, "x^2 + y^2, x y"), lex_order());
    REQUIRE(gb.size() == 3);
    CHECK(to_string(R, gb[0]) == "x^2 + y^2");
    CHECK(to_string(R, gb[1]) == "x*y");
    CHECK(to_string(R, gb[2]) == "y^3");
    // grevlex on the same ideal
    auto gg = buchberger(R, parse_ideal(R, "x^2 + y^2, x y"), grevlex_order());
    CHECK(gg.size() == 3);
    // a basis of the whole ring collapses to 1
    auto unit = buchberger(R, parse_ideal(R, "x, x + 1"), lex_order());
    REQUIRE(unit.size() == 1);
    CHECK(to_string(R, unit[0]) == "1");
}

TEST_CASE("normal form properties") {
    Ring R = make_ring(FieldCfg{5, 1, {}}, {"x", "y"});
    auto gens = parse_ideal(R, "x^2 + y^2, x y");
    auto gb = buchberger(R, gens, lex_order());
    // members reduce to zero
    Poly member = poly_add(R, poly_mul(R, gens[0], parse_poly(R, "x + 3")),
                           poly_mul(R, gens[1], parse_poly(R, "y^2")));
    CHECK(normal_form(R, member, gb, lex_order()).is_zero());
    // reduction is idempotent and fixes remainders
    Poly f = parse_poly(R, "x^3 + x y + y + 1");
    Poly r1 = normal_form(R, f, gb, lex_order());
    CHECK(poly_eq(normal_form(R, r1, gb, lex_order()), r1));
    // difference of input and remainder is in the ideal
    CHECK(normal_form(R, poly_sub(R, f, r1), gb, lex_order()).is_zero());
}

TEST_CASE("initial ideals under both orders") {
    Ring R = make_ring(FieldCfg{5, 1, {}}, {"x", "y", "z"});
    auto gb = buchberger(R, parse_ideal(R, "x y - z^2"), lex_order());
    MonomialIdeal ini = initial_ideal(R, gb, lex_order());
    CHECK(ini.gens.size() == 1);
    CHECK(ini.gens[0].e == std::vector<uint32_t>{1, 1, 0});
    // the twisted cubic: lex initial ideal
    Ring S = make_ring(FieldCfg{7, 1, {}}, {"x", "y", "z", "w"});
    auto tc = parse_ideal(S, "x z - y^2, x w - y z, y w - z^2");
    MonomialIdeal ini2 = initial_ideal(S, buchberger(S, tc, grevlex_order()), grevlex_order());
    CHECK(contains(ini2, ExpVec::of({0, 2, 0, 0})));
}

TEST_CASE("hilbert values against dense linear algebra") {
    Ring R = make_ring(FieldCfg{5, 1, {}}, {"x", "y", "z"});
    auto gens = parse_ideal(R, "x^2 + y^2, x y");
    CHECK(hilbert_value(R, gens, 0) == 1);
    CHECK(hilbert_value(R, gens, 1) == 3);
    CHECK(hilbert_value(R, gens, 2) == 4);
    CHECK(hilbert_value(R, gens, 3) == 4);
    std::mt19937_64 rng(31);
    Ring S = make_ring(FieldCfg{101, 1, {}}, {"x", "y", "z"});
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<Poly> gs;
        gs.push_back(oracle::rand_homogeneous(S, rng, 2 + uint32_t(rng() % 2)));
        if (rng() % 2) gs.push_back(oracle::rand_homogeneous(S, rng, 2));
        for (uint64_t t = 0; t <= 5; ++t)
            CHECK(hilbert_value(S, gs, t) == oracle::quotient_piece_dim(S, gs, t));
    }
    CHECK_THROWS_AS(hilbert_value(R, parse_ideal(R, "x + 1"), 2), DomainError);
}

TEST_CASE("height of pinned ideals") {
    Ring R = make_ring(FieldCfg{5, 1, {}}, {"x", "y", "z"});
    CHECK(height(R, parse_ideal(R, "x^2 + y^2, x y")) == 2);
    CHECK(height(R, parse_ideal(R, "x y")) == 1);
    CHECK(height(R, parse_ideal(R, "x, y, z")) == 3);
    CHECK(height(R, parse_ideal(R, "x^2, x y")) == 1);
    CHECK(height(R, parse_ideal(R, "x^2, y z")) == 2);
    Ring F2 = make_ring(FieldCfg{2, 1, {}}, {"x", "y", "z"});
    CHECK(height(F2, parse_ideal(F2, "x^3 + y^3 + z^3")) == 1);
}

TEST_CASE("degree cap halts runaway bases") {
    Ring R = make_ring(FieldCfg{5, 1, {}}, {"x", "y", "z"});
    GBCaps caps;
    caps.max_degree = 2;
    CHECK_THROWS_AS(buchberger(R, parse_ideal(R, "x^3 - y^2 z, y^3 - x z^2"), lex_order(), caps),
                    ResourceCapError);
}
