#pragma once

#include "fptkit/errors.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace fptkit {

// Element of F_{p^s}, s <= 4: coefficients of 1, g, g^2, g^3 where g is the
// class of the generator mod the field's modulus. Entries < p; unused upper
// entries are zero, so elements compare with ==.
using FF = std::array<uint16_t, 4>;

struct FieldCfg {
    uint32_t p = 2;
    uint32_t s = 1;
    // Monic modulus, coefficients low to high, size s+1, leading entry 1.
    // Empty: the field picks the smallest irreducible monic polynomial
    // (coefficient tuples read as base-p integers, low digit first).
    std::vector<uint32_t> modulus;
};

class Field {
public:
    explicit Field(const FieldCfg& cfg);
    Field(uint32_t p, uint32_t s = 1) : Field(FieldCfg{p, s, {}}) {}

    uint32_t p() const { return p_; }
    uint32_t s() const { return s_; }
    uint64_t q() const { return q_; }
    const std::vector<uint32_t>& modulus() const { return mod_; }

    FF zero() const { return FF{0, 0, 0, 0}; }
    FF one() const { return FF{1, 0, 0, 0}; }
    FF gen() const;
    FF from_int(long long v) const;
    bool is_zero(const FF& a) const { return a == FF{0, 0, 0, 0}; }

    FF add(const FF& a, const FF& b) const;
    FF sub(const FF& a, const FF& b) const;
    FF neg(const FF& a) const;
    FF mul(const FF& a, const FF& b) const;
    FF inv(const FF& a) const; // DomainError on zero
    FF pow(FF a, uint64_t k) const;

    // Bijection with 0..q-1 (base-p digits), for hashing and enumeration.
    uint64_t index(const FF& a) const;
    FF element(uint64_t idx) const;

    // s == 1: the representative 0..p-1. s > 1: "[c0,c1,...]".
    std::string to_string(const FF& a) const;

    bool same_field(const Field& other) const {
        return p_ == other.p_ && s_ == other.s_ && mod_ == other.mod_;
    }

private:
    uint32_t p_ = 0, s_ = 0;
    uint64_t q_ = 0;
    std::vector<uint32_t> mod_;           // monic, size s+1
    std::array<FF, 3> red_{};             // g^{s+k} reduced, k = 0..2
};

// Image of `small`'s generator inside `big` (p equal, small.s() divides
// big.s()), found by exhaustive root search; requires big.q() <= 2^16.
FF embedding_root(const Field& small, const Field& big);
FF embed(const Field& small, const Field& big, const FF& root, const FF& a);

} // namespace fptkit
