#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace fptkit {

using Int = mpz_class;
using Rat = mpq_class;
using QVec = std::vector<Rat>;

// mpq_class(num, den) does not canonicalize; every construction from a
// num/den pair must go through here.
inline Rat rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(long num, long den = 1) { return rat(Int(num), Int(den)); }

inline Int rat_ceil(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

inline Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

} // namespace fptkit
