#include "fptkit/ci_hilbert.hpp"

#include "fptkit/errors.hpp"
#include "fptkit/rational.hpp"

#include <vector>

namespace fptkit {

namespace {

void validate(uint32_t n, uint32_t d, uint32_t s) {
    if (n < 1 || d < 1 || s < 1) throw DomainError("parameters must be positive");
    if (uint64_t(n) * d > 4096) throw ResourceCapError("series expansion too large");
    if (s > 4096) throw ResourceCapError("power too large");
}

// Coefficients of (1 + x + ... + x^{d-1})^n.
std::vector<Int> truncated_geometric_power(uint32_t n, uint32_t d) {
    std::vector<Int> acc{Int(1)};
    for (uint32_t i = 0; i < n; ++i) {
        std::vector<Int> next(acc.size() + d - 1, Int(0));
        for (size_t a = 0; a < acc.size(); ++a)
            for (uint32_t b = 0; b < d; ++b) next[a + b] += acc[a];
        acc = std::move(next);
    }
    return acc;
}

Int series_coeff_int(uint32_t n, uint32_t d, uint64_t t) {
    auto P = truncated_geometric_power(n, d);
    Int sum = 0;
    for (size_t i = 0; i < P.size() && i <= t; ++i) sum += P[i];
    return sum;
}

uint64_t to_u64(const Int& v) {
    if (v < 0 || !v.fits_ulong_p()) throw ResourceCapError("value exceeds 64 bits");
    return v.get_ui();
}

} // namespace

uint64_t ci_series_coeff(uint32_t n, uint32_t d, uint64_t t) {
    validate(n, d, 1);
    return to_u64(series_coeff_int(n, d, t));
}

uint64_t ci_power_hilbert(uint32_t n, uint32_t d, uint32_t s, uint64_t t) {
    validate(n, d, s);
    auto P = truncated_geometric_power(n, d);
    Int total = 0;
    for (uint32_t k = 0; k < s; ++k) {
        if (uint64_t(d) * k > t) continue;
        uint64_t arg = t - uint64_t(d) * k;
        Int coeff = 0;
        for (size_t i = 0; i < P.size() && i <= arg; ++i) coeff += P[i];
        Int layer;
        mpz_bin_uiui(layer.get_mpz_t(), k + n - 1, n - 1);
        total += layer * coeff;
    }
    return to_u64(total);
}

CIStable ci_power_hilbert_stable(uint32_t n, uint32_t d, uint32_t s) {
    validate(n, d, s);
    CIStable out;
    out.threshold = uint64_t(d - 1) * n + uint64_t(d) * (s - 1);
    Int binom, power;
    mpz_bin_uiui(binom.get_mpz_t(), n + s - 1, n);
    mpz_ui_pow_ui(power.get_mpz_t(), d, n);
    out.value = to_u64(binom * power);
    return out;
}

} // namespace fptkit
