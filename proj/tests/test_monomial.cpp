#include <doctest.h>

#include "fptkit/errors.hpp"
#include "fptkit/monomial.hpp"
#include "fptkit/parse.hpp"
#include "oracles.hpp"

#include <random>

using namespace fptkit;

namespace {

ExpVec ev(std::initializer_list<uint32_t> xs) { return ExpVec::of(std::vector<uint32_t>(xs)); }

MonomialIdeal mi(uint32_t n, std::initializer_list<std::initializer_list<uint32_t>> gens) {
    std::vector<ExpVec> ms;
    for (const auto& g : gens) ms.push_back(ExpVec::of(std::vector<uint32_t>(g)));
    return monomial_ideal(n, ms);
}

} // namespace

TEST_CASE("minimal generators and membership") {
    MonomialIdeal a = mi(2, {{2, 0}, {2, 1}, {0, 3}, {1, 2}});
    CHECK(a.gens.size() == 3); // x^2 y is redundant
    CHECK(contains(a, ev({2, 5})));
    CHECK(contains(a, ev({1, 2})));
    CHECK_FALSE(contains(a, ev({1, 1})));
    MonomialIdeal b = mi(2, {{1, 0}, {0, 1}});
    CHECK(ideal_subset(a, b));
    CHECK_FALSE(ideal_subset(b, a));
    CHECK(ideal_eq(a, mi(2, {{0, 3}, {1, 2}, {2, 0}})));
}

TEST_CASE("products powers and bracket powers") {
    MonomialIdeal m = mi(2, {{1, 0}, {0, 1}});
    MonomialIdeal m2 = monomial_product(m, m);
    CHECK(ideal_eq(m2, mi(2, {{2, 0}, {1, 1}, {0, 2}})));
    CHECK(ideal_eq(monomial_power(m, 3), mi(2, {{3, 0}, {2, 1}, {1, 2}, {0, 3}})));
    CHECK(ideal_eq(monomial_bracket(m2, 2), mi(2, {{4, 0}, {2, 2}, {0, 4}})));
}

TEST_CASE("thresholds of pinned monomial ideals") {
    CHECK(monomial_fpt(mi(1, {{3}})) == rat(1, 3));
    CHECK(monomial_fpt(mi(2, {{1, 1}})) == rat(1));
    CHECK(monomial_fpt(mi(2, {{2, 0}, {0, 3}})) == rat(5, 6));
    CHECK(monomial_fpt(mi(3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}})) == rat(1));
    CHECK(monomial_fpt(mi(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == rat(3));
    CHECK(monomial_fpt(mi(3, {{2, 0, 0}, {0, 1, 1}})) == rat(3, 2));
    // powers of the maximal ideal: fpt(m^d) = n/d
    for (long d = 1; d <= 6; ++d)
        CHECK(monomial_fpt(monomial_power(mi(2, {{1, 0}, {0, 1}}), uint64_t(d))) == rat(2, d));
}

TEST_CASE("thresholds agree with the dual oracle on a seeded corpus") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 120; ++trial) {
        uint32_t n = 1 + uint32_t(rng() % 3);
        MonomialIdeal a = oracle::rand_monomial_ideal(rng, n, 6, 5);
        CHECK(monomial_fpt(a) == oracle::monomial_fpt_dual(a));
    }
}

TEST_CASE("integral closure on pinned examples") {
    CHECK(ideal_eq(integral_closure(mi(2, {{2, 0}, {0, 2}})), mi(2, {{2, 0}, {1, 1}, {0, 2}})));
    CHECK(ideal_eq(integral_closure(mi(2, {{4, 0}, {0, 4}})),
                   mi(2, {{4, 0}, {3, 1}, {2, 2}, {1, 3}, {0, 4}})));
    // already integrally closed
    MonomialIdeal m2 = monomial_power(mi(2, {{1, 0}, {0, 1}}), 2);
    CHECK(ideal_eq(integral_closure(m2), m2));
    CHECK(ideal_eq(integral_closure(mi(1, {{5}})), mi(1, {{5}})));
}

TEST_CASE("integral closure matches the dual membership oracle") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        uint32_t n = 2 + uint32_t(rng() % 2);
        MonomialIdeal a = oracle::rand_monomial_ideal(rng, n, 5, 4);
        MonomialIdeal cl = integral_closure(a);
        // every closure generator is in the Newton polyhedron, and every
        // monomial in a small box is in the closure iff the oracle says so
        for (const auto& g : cl.gens) {
            QVec x;
            for (uint32_t e : g.e) x.push_back(rat(long(e)));
            CHECK(oracle::newton_member_dual(a, x));
        }
        std::vector<uint32_t> box(n, 0);
        while (true) {
            QVec x;
            for (uint32_t e : box) x.push_back(rat(long(e)));
            CHECK(contains(cl, ExpVec::of(box)) == oracle::newton_member_dual(a, x));
            size_t i = 0;
            while (i < box.size()) {
                if (++box[i] <= 6) break;
                box[i] = 0;
                ++i;
            }
            if (i == box.size()) break;
        }
    }
}

TEST_CASE("multiplicity and height") {
    CHECK(monomial_multiplicity(mi(2, {{2, 0}, {0, 2}})) == Int(4));
    CHECK(monomial_multiplicity(mi(2, {{2, 0}, {0, 3}})) == Int(6));
    CHECK(monomial_multiplicity(monomial_power(mi(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 2)) ==
          Int(8));
    CHECK(monomial_height(mi(2, {{2, 0}, {0, 3}})) == 2);
    CHECK(monomial_height(mi(2, {{1, 1}})) == 1);
    CHECK(monomial_height(mi(3, {{2, 0, 0}, {1, 1, 0}})) == 1);
    CHECK(monomial_height(mi(3, {{2, 0, 0}, {0, 1, 1}})) == 2);
    CHECK_THROWS_AS(monomial_multiplicity(mi(2, {{1, 1}})), DomainError);
}

TEST_CASE("standard monomial counts") {
    MonomialIdeal a = mi(2, {{2, 0}, {0, 2}});
    // quotient basis: 1, x, y, xy
    CHECK(standard_count(a, 0) == 1);
    CHECK(standard_count(a, 1) == 2);
    CHECK(standard_count(a, 2) == 1);
    CHECK(standard_count(a, 3) == 0);
}

TEST_CASE("degree slices of the Newton polytope") {
    MonomialIdeal a = mi(2, {{2, 0}, {1, 3}});
    QPolytope G = gamma_t(a, 2);
    // degree-2 monomials in the ideal: x^2 only
    CHECK(G.vertices.size() == 1);
    CHECK(G.vertices[0] == QVec{rat(2), rat(0)});
    QPolytope G4 = gamma_t(mi(2, {{1, 0}, {0, 3}}), 2);
    CHECK(G4.affine_dim == 1);
}

TEST_CASE("relative interior bound levels") {
    MonomialIdeal m2 = monomial_power(mi(2, {{1, 0}, {0, 1}}), 2);
    auto b = relint_fpt_bound(m2, 2, 4);
    REQUIRE(b.has_value());
    CHECK(*b == rat(1, 2));
    CHECK_FALSE(relint_fpt_bound(mi(2, {{2, 0}}), 2, 4).has_value());
}

TEST_CASE("limiting probe levels stay graded and nested") {
    Ring R = make_ring(FieldCfg{5, 1, {}}, {"x", "y", "z"});
    auto gens = parse_ideal(R, "x y - z^2");
    LimitingProbeConfig cfg;
    cfg.t_scale = 3;
    auto levels = limiting_probe(R, gens, lex_order(), cfg);
    REQUIRE(levels.size() == 3);
    for (const auto& L : levels) {
        CHECK(L.graded_ok);
        CHECK(L.chain_ok);
        REQUIRE(L.scaled_slice.vertices.size() == 3);
        CHECK(L.scaled_slice.vertices[0] == QVec{rat(1), rat(1), rat(1)});
        CHECK(L.scaled_slice.vertices[1] == QVec{rat(1), rat(2), rat(0)});
        CHECK(L.scaled_slice.vertices[2] == QVec{rat(2), rat(1), rat(0)});
    }
    CHECK(levels[0].s == 1);
    CHECK(levels[1].s == 2);
    CHECK(levels[2].s == 4);
    CHECK(levels[2].t == 12);
}
