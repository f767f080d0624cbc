#include <doctest.h>

#include "fptkit/ci_hilbert.hpp"
#include "oracles.hpp"

using namespace fptkit;

TEST_CASE("series coefficients pinned") {
    // two quadrics in three variables: 1, 3, 4, 4, 4, ...
    CHECK(ci_series_coeff(2, 2, 0) == 1);
    CHECK(ci_series_coeff(2, 2, 1) == 3);
    CHECK(ci_series_coeff(2, 2, 2) == 4);
    CHECK(ci_series_coeff(2, 2, 3) == 4);
    CHECK(ci_series_coeff(2, 2, 9) == 4);
    // one quadric in two variables: 1, 2, 2, 2, ...
    CHECK(ci_series_coeff(1, 2, 0) == 1);
    CHECK(ci_series_coeff(1, 2, 5) == 2);
    // degree zero is always one
    CHECK(ci_series_coeff(3, 4, 0) == 1);
    // stable value is d^n
    CHECK(ci_series_coeff(3, 2, 30) == 8);
    CHECK(ci_series_coeff(2, 3, 30) == 9);
}

TEST_CASE("power hilbert pinned") {
    CHECK(ci_power_hilbert(2, 2, 1, 2) == 4);
    CHECK(ci_power_hilbert(2, 2, 2, 3) == 10);
    CHECK(ci_power_hilbert(2, 2, 2, 4) == 12);
    CHECK(ci_power_hilbert(2, 2, 2, 9) == 12);
    // s = 1 reduces to the plain series
    for (uint64_t t = 0; t <= 6; ++t)
        CHECK(ci_power_hilbert(3, 2, 1, t) == ci_series_coeff(3, 2, t));
}

TEST_CASE("stabilization thresholds") {
    CIStable st = ci_power_hilbert_stable(2, 2, 2);
    CHECK(st.threshold == 4);
    CHECK(st.value == 12);
    CIStable st2 = ci_power_hilbert_stable(1, 2, 1);
    CHECK(st2.threshold == 1);
    CHECK(st2.value == 2);
    CIStable st3 = ci_power_hilbert_stable(3, 1, 1);
    CHECK(st3.threshold == 0);
    CHECK(st3.value == 1);
    // the function really is constant past the threshold and smaller before
    for (uint32_t s : {1u, 2u, 3u}) {
        CIStable a = ci_power_hilbert_stable(2, 3, s);
        CHECK(ci_power_hilbert(2, 3, s, a.threshold) == a.value);
        CHECK(ci_power_hilbert(2, 3, s, a.threshold + 1) == a.value);
        CHECK(ci_power_hilbert(2, 3, s, a.threshold + 7) == a.value);
        if (a.threshold > 0) CHECK(ci_power_hilbert(2, 3, s, a.threshold - 1) < a.value);
    }
}

TEST_CASE("power hilbert matches random form linear algebra") {
    // explicit random complete intersections over a large prime field
    for (auto [n, d, s] : {std::array<uint32_t, 3>{1, 2, 2}, std::array<uint32_t, 3>{2, 2, 2},
                           std::array<uint32_t, 3>{2, 3, 2}}) {
        CIStable st = ci_power_hilbert_stable(n, d, s);
        for (uint64_t t = 0; t <= st.threshold + 2; ++t)
            CHECK(ci_power_hilbert(n, d, s, t) ==
                  oracle::ci_hilbert_explicit(n, d, s, t, 7 + n + d));
    }
}
