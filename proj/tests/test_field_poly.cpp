#include <doctest.h>

#include "fptkit/errors.hpp"
#include "fptkit/field.hpp"
#include "fptkit/linalg.hpp"
#include "fptkit/parse.hpp"
#include "fptkit/poly.hpp"

#include <random>

using namespace fptkit;

TEST_CASE("prime field arithmetic") {
    Field F(FieldCfg{5, 1, {}});
    CHECK(F.q() == 5);
    for (long a = 0; a < 5; ++a)
        for (long b = 0; b < 5; ++b) {
            CHECK(F.to_string(F.add(F.from_int(a), F.from_int(b))) ==
                  F.to_string(F.from_int((a + b) % 5)));
            CHECK(F.to_string(F.mul(F.from_int(a), F.from_int(b))) ==
                  F.to_string(F.from_int((a * b) % 5)));
        }
    for (long a = 1; a < 5; ++a) {
        FF x = F.from_int(a);
        CHECK(F.to_string(F.mul(x, F.inv(x))) == F.to_string(F.one()));
    }
    CHECK_THROWS_AS(Field(FieldCfg{4, 1, {}}), DomainError);
    CHECK_THROWS_AS(Field(FieldCfg{263, 1, {}}), DomainError);
}

TEST_CASE("extension field arithmetic") {
    Field F(FieldCfg{2, 2, {}});
    CHECK(F.q() == 4);
    // Frobenius is additive in characteristic 2: (a+b)^2 = a^2 + b^2
    for (uint64_t i = 0; i < 4; ++i)
        for (uint64_t j = 0; j < 4; ++j) {
            FF a = F.element(i), b = F.element(j);
            FF lhs = F.mul(F.add(a, b), F.add(a, b));
            FF rhs = F.add(F.mul(a, a), F.mul(b, b));
            CHECK(F.to_string(lhs) == F.to_string(rhs));
        }
    // the multiplicative generator has order q - 1
    FF g = F.gen();
    FF acc = g;
    int order = 1;
    while (F.to_string(acc) != F.to_string(F.one())) {
        acc = F.mul(acc, g);
        ++order;
    }
    CHECK(order == 3);
}

TEST_CASE("field embedding preserves operations") {
    Field small(FieldCfg{3, 1, {}});
    Field big(FieldCfg{3, 2, {}});
    FF root = embedding_root(small, big);
    for (long a = 0; a < 3; ++a)
        for (long b = 0; b < 3; ++b) {
            FF ea = embed(small, big, root, small.from_int(a));
            FF eb = embed(small, big, root, small.from_int(b));
            FF sum = embed(small, big, root, small.add(small.from_int(a), small.from_int(b)));
            FF prod = embed(small, big, root, small.mul(small.from_int(a), small.from_int(b)));
            CHECK(big.to_string(big.add(ea, eb)) == big.to_string(sum));
            CHECK(big.to_string(big.mul(ea, eb)) == big.to_string(prod));
        }
}

TEST_CASE("parser grammar and errors") {
    Ring R = make_ring(FieldCfg{5, 1, {}}, {"x", "y", "z"});
    Poly f = parse_poly(R, "2 x^2 y + 3z - 1");
    CHECK(to_string(R, f) == "2*x^2*y + 3*z + 4");
    // juxtaposition multiplies, parens group
    CHECK(poly_eq(parse_poly(R, "x(y+z)"), parse_poly(R, "x y + x z")));
    CHECK(poly_eq(parse_poly(R, "(x+y)^2"), parse_poly(R, "x^2 + 2 x y + y^2")));
    // ideal split ignores commas inside parentheses-scoped exponents
    auto gens = parse_ideal(R, "x^2, y^2, (x+y) z");
    CHECK(gens.size() == 3);
    CHECK_THROWS_AS(parse_poly(R, "x + w"), ParseError);
    CHECK_THROWS_AS(parse_poly(R, "x + + y"), ParseError);
    CHECK_THROWS_AS(parse_poly(R, ""), ParseError);
    try {
        parse_poly(R, "x ? y");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
}

TEST_CASE("polynomial ring identities") {
    Ring R = make_ring(FieldCfg{7, 1, {}}, {"x", "y"});
    std::mt19937_64 rng(11);
    auto rand_poly = [&]() {
        std::vector<Term> ts;
        for (int k = 0; k < 5; ++k) {
            std::vector<uint32_t> e{uint32_t(rng() % 4), uint32_t(rng() % 4)};
            FF c = R.F.from_int(static_cast<long long>(rng() % 7));
            if (!R.F.is_zero(c)) ts.push_back({ExpVec::of(e), c});
        }
        return poly_from_terms(R, std::move(ts));
    };
    for (int trial = 0; trial < 20; ++trial) {
        Poly f = rand_poly(), g = rand_poly(), h = rand_poly();
        CHECK(poly_eq(poly_mul(R, poly_add(R, f, g), h),
                      poly_add(R, poly_mul(R, f, h), poly_mul(R, g, h))));
        CHECK(poly_eq(poly_mul(R, f, g), poly_mul(R, g, f)));
        CHECK(poly_add(R, f, poly_neg(R, f)).is_zero());
    }
    Poly f = parse_poly(R, "x + 2y");
    CHECK(poly_eq(poly_pow(R, f, 3), poly_mul(R, f, poly_mul(R, f, f))));
    // char-7 binomial collapse
    CHECK(poly_eq(poly_pow(R, f, 7), parse_poly(R, "x^7 + 2 y^7")));
}

TEST_CASE("truncated powering matches full powering") {
    Ring R = make_ring(FieldCfg{3, 1, {}}, {"x", "y"});
    Poly f = parse_poly(R, "x^2 + x y + 2 y^2");
    for (uint64_t q : {3u, 9u}) {
        Poly full = truncate_bracket(poly_pow(R, f, 4), q);
        Poly trunc = poly_pow_trunc(R, f, 4, q);
        CHECK(poly_eq(full, trunc));
    }
}

TEST_CASE("derivative rules") {
    Ring R = make_ring(FieldCfg{5, 1, {}}, {"x", "y"});
    Poly f = parse_poly(R, "x^3 y + 2 x y^2");
    CHECK(poly_eq(poly_derivative(R, f, 0), parse_poly(R, "3 x^2 y + 2 y^2")));
    CHECK(poly_eq(poly_derivative(R, f, 1), parse_poly(R, "x^3 + 4 x y")));
    // product rule on a random pair
    Poly g = parse_poly(R, "x^2 + y");
    Poly lhs = poly_derivative(R, poly_mul(R, f, g), 0);
    Poly rhs = poly_add(R, poly_mul(R, poly_derivative(R, f, 0), g),
                        poly_mul(R, f, poly_derivative(R, g, 0)));
    CHECK(poly_eq(lhs, rhs));
    // p-th powers are constants for the derivation
    CHECK(poly_derivative(R, parse_poly(R, "x^5"), 0).is_zero());
    CHECK_THROWS_AS(poly_derivative(R, f, 2), DomainError);
}

TEST_CASE("linear change of coordinates") {
    Ring R = make_ring(FieldCfg{5, 1, {}}, {"x", "y"});
    Poly f = parse_poly(R, "x^2 + x y");
    FMat M{{R.F.from_int(1), R.F.from_int(1)}, {R.F.from_int(0), R.F.from_int(1)}};
    // x -> x + y, y -> y
    Poly g = linear_change(R, f, M);
    CHECK(poly_eq(g, parse_poly(R, "x^2 + 3 x y + 2 y^2")));
    auto Minv = f_inverse(R.F, M);
    REQUIRE(Minv.has_value());
    CHECK(poly_eq(linear_change(R, g, *Minv), f));
}

TEST_CASE("initial terms under both orders") {
    Ring R = make_ring(FieldCfg{5, 1, {}}, {"x", "y", "z"});
    Poly f = parse_poly(R, "x y^2 + x^2 z + y z^2");
    Term lex = initial_term(R, f, lex_order());
    CHECK(lex.m.e == std::vector<uint32_t>{2, 0, 1});
    Term grev = initial_term(R, f, grevlex_order());
    // all degree 3; grevlex prefers the smallest trailing exponents
    CHECK(grev.m.e == std::vector<uint32_t>{1, 2, 0});
}

TEST_CASE("power products enumerate multisets") {
    Ring R = make_ring(FieldCfg{5, 1, {}}, {"x", "y"});
    auto gens = parse_ideal(R, "x, y");
    auto prods = power_products(R, gens, 3, 1000);
    CHECK(prods.size() == 4); // x^3, x^2 y, x y^2, y^3
    CHECK_THROWS_AS(power_products(R, gens, 3, 2), ResourceCapError);
}
