#pragma once

#include <cstdint>

namespace fptkit {

// Coefficient of degree t in (1 - x^d)^n / (1 - x)^{n+1}: the Hilbert
// function of n generic degree-d forms in n+1 variables.
uint64_t ci_series_coeff(uint32_t n, uint32_t d, uint64_t t);

// Hilbert function of the s-th power: sum over exponent tuples with
// a_1 + ... + a_n <= s - 1 of the series coefficient at t - d * sum,
// grouped by layer size.
uint64_t ci_power_hilbert(uint32_t n, uint32_t d, uint32_t s, uint64_t t);

struct CIStable {
    uint64_t threshold; // (d-1)n + d(s-1)
    uint64_t value;     // binom(n+s-1, n) * d^n
};

// Degree past which the power's Hilbert function is constant, and that value.
CIStable ci_power_hilbert_stable(uint32_t n, uint32_t d, uint32_t s);

} // namespace fptkit
