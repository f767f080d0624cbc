#include "fptkit/field.hpp"

#include <algorithm>

namespace fptkit {

namespace {

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Evaluate a monic polynomial (coeffs low to high) at a, over F_p.
uint32_t eval_mod_p(const std::vector<uint32_t>& c, uint32_t a, uint32_t p) {
    uint64_t acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = (acc * a + c[i]) % p;
    return uint32_t(acc);
}

bool has_root(const std::vector<uint32_t>& c, uint32_t p) {
    for (uint32_t a = 0; a < p; ++a)
        if (eval_mod_p(c, a, p) == 0) return true;
    return false;
}

// Remainder of a degree-4 monic polynomial mod a monic quadratic x^2+b1*x+b0.
bool divisible_by_quadratic(const std::vector<uint32_t>& c, uint32_t b1, uint32_t b0,
                            uint32_t p) {
    // Synthetic division: rem starts as c, reduce degrees 4,3,2.
    uint64_t r[5];
    for (int i = 0; i < 5; ++i) r[i] = c[i];
    for (int k = 4; k >= 2; --k) {
        uint64_t lead = r[k] % p;
        if (lead == 0) continue;
        r[k] = 0;
        r[k - 1] = (r[k - 1] + lead * (p - b1)) % p;
        r[k - 2] = (r[k - 2] + lead * (p - b0)) % p;
    }
    return r[0] % p == 0 && r[1] % p == 0;
}

bool is_irreducible(const std::vector<uint32_t>& c, uint32_t p, uint32_t s,
                    const std::vector<std::pair<uint32_t, uint32_t>>& irr_quadratics) {
    if (has_root(c, p)) return false;
    if (s == 4) {
        for (auto [b1, b0] : irr_quadratics)
            if (divisible_by_quadratic(c, b1, b0, p)) return false;
    }
    return true;
}

std::vector<std::pair<uint32_t, uint32_t>> irreducible_quadratics(uint32_t p) {
    std::vector<std::pair<uint32_t, uint32_t>> out;
    std::vector<uint32_t> q = {0, 0, 1};
    for (uint32_t b1 = 0; b1 < p; ++b1)
        for (uint32_t b0 = 0; b0 < p; ++b0) {
            q[0] = b0;
            q[1] = b1;
            if (!has_root(q, p)) out.emplace_back(b1, b0);
        }
    return out;
}

} // namespace

Field::Field(const FieldCfg& cfg) : p_(cfg.p), s_(cfg.s) {
    if (!is_prime(p_) || p_ > 257) throw DomainError("field characteristic must be a prime <= 257");
    if (s_ < 1 || s_ > 4) throw DomainError("field extension degree must be in 1..4");
    q_ = 1;
    for (uint32_t i = 0; i < s_; ++i) q_ *= p_;

    if (s_ == 1) {
        mod_ = cfg.modulus.empty() ? std::vector<uint32_t>{0, 1} : cfg.modulus;
        if (mod_.size() != 2 || mod_[1] != 1)
            throw DomainError("prime field modulus must be the generator itself");
        return;
    }

    auto irr_quads = (s_ == 4 || !cfg.modulus.empty())
                         ? irreducible_quadratics(p_)
                         : std::vector<std::pair<uint32_t, uint32_t>>{};
    if (!cfg.modulus.empty()) {
        mod_ = cfg.modulus;
        if (mod_.size() != s_ + 1 || mod_[s_] != 1)
            throw DomainError("modulus must be monic of degree s");
        for (auto c : mod_)
            if (c >= p_) throw DomainError("modulus coefficients must be < p");
        if (!is_irreducible(mod_, p_, s_, irr_quads))
            throw DomainError("modulus is reducible");
    } else {
        if (s_ != 4) irr_quads.clear();
        mod_.assign(s_ + 1, 0);
        mod_[s_] = 1;
        uint64_t total = 1;
        for (uint32_t i = 0; i < s_; ++i) total *= p_;
        bool found = false;
        for (uint64_t code = 0; code < total; ++code) {
            uint64_t v = code;
            for (uint32_t i = 0; i < s_; ++i) {
                mod_[i] = uint32_t(v % p_);
                v /= p_;
            }
            if (is_irreducible(mod_, p_, s_, irr_quads)) {
                found = true;
                break;
            }
        }
        if (!found) throw DomainError("no irreducible modulus found");
    }

    // red_[k] = g^{s+k} as a reduced element: g^s = -(m_0 + ... + m_{s-1} g^{s-1}).
    FF gs = zero();
    for (uint32_t i = 0; i < s_; ++i) gs[i] = uint16_t((p_ - mod_[i] % p_) % p_);
    red_[0] = gs;
    for (int k = 1; k < 3; ++k) {
        // red_[k] = g * red_[k-1], reducing the single overflow coefficient.
        FF prev = red_[k - 1];
        FF cur = zero();
        uint32_t carry = prev[s_ - 1];
        for (uint32_t i = s_ - 1; i >= 1; --i) cur[i] = prev[i - 1];
        cur[0] = 0;
        for (uint32_t i = 0; i < s_; ++i)
            cur[i] = uint16_t((cur[i] + uint64_t(carry) * red_[0][i]) % p_);
        red_[k] = cur;
    }
}

FF Field::gen() const {
    if (s_ == 1) throw DomainError("prime field has no extension generator");
    FF g = zero();
    g[1] = 1;
    return g;
}

FF Field::from_int(long long v) const {
    long long r = v % (long long)p_;
    if (r < 0) r += p_;
    FF a = zero();
    a[0] = uint16_t(r);
    return a;
}

FF Field::add(const FF& a, const FF& b) const {
    FF r = zero();
    for (uint32_t i = 0; i < s_; ++i) r[i] = uint16_t((a[i] + b[i]) % p_);
    return r;
}

FF Field::sub(const FF& a, const FF& b) const {
    FF r = zero();
    for (uint32_t i = 0; i < s_; ++i) r[i] = uint16_t((a[i] + p_ - b[i]) % p_);
    return r;
}

FF Field::neg(const FF& a) const { return sub(zero(), a); }

FF Field::mul(const FF& a, const FF& b) const {
    if (s_ == 1) {
        FF r = zero();
        r[0] = uint16_t((uint32_t(a[0]) * b[0]) % p_);
        return r;
    }
    uint64_t conv[7] = {0};
    for (uint32_t i = 0; i < s_; ++i)
        for (uint32_t j = 0; j < s_; ++j) conv[i + j] += uint64_t(a[i]) * b[j];
    FF r = zero();
    for (uint32_t i = 0; i < s_; ++i) r[i] = uint16_t(conv[i] % p_);
    for (uint32_t k = s_; k <= 2 * (s_ - 1); ++k) {
        uint64_t c = conv[k] % p_;
        if (c == 0) continue;
        const FF& red = red_[k - s_];
        for (uint32_t i = 0; i < s_; ++i)
            r[i] = uint16_t((r[i] + c * red[i]) % p_);
    }
    return r;
}

FF Field::pow(FF a, uint64_t k) const {
    FF r = one();
    while (k) {
        if (k & 1) r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

FF Field::inv(const FF& a) const {
    if (is_zero(a)) throw DomainError("division by zero in finite field");
    return pow(a, q_ - 2);
}

uint64_t Field::index(const FF& a) const {
    uint64_t idx = 0;
    for (uint32_t i = s_; i-- > 0;) idx = idx * p_ + a[i];
    return idx;
}

FF Field::element(uint64_t idx) const {
    FF a = zero();
    for (uint32_t i = 0; i < s_; ++i) {
        a[i] = uint16_t(idx % p_);
        idx /= p_;
    }
    return a;
}

std::string Field::to_string(const FF& a) const {
    if (s_ == 1) return std::to_string(a[0]);
    std::string out = "[";
    for (uint32_t i = 0; i < s_; ++i) {
        if (i) out += ",";
        out += std::to_string(a[i]);
    }
    return out + "]";
}

FF embedding_root(const Field& small, const Field& big) {
    if (small.p() != big.p()) throw DomainError("embedding requires equal characteristic");
    if (big.s() % small.s() != 0) throw DomainError("embedding requires divisible extension degrees");
    if (small.s() == 1) return big.zero(); // unused: constants embed directly
    if (big.q() > 65536) throw ResourceCapError("embedding search capped at q <= 2^16");
    const auto& m = small.modulus();
    for (uint64_t idx = 0; idx < big.q(); ++idx) {
        FF z = big.element(idx);
        FF acc = big.zero();
        for (size_t i = m.size(); i-- > 0;) {
            acc = big.mul(acc, z);
            acc = big.add(acc, big.from_int((long long)m[i]));
        }
        if (big.is_zero(acc)) return z;
    }
    throw DomainError("no embedding root found"); // unreachable for valid fields
}

FF embed(const Field& small, const Field& big, const FF& root, const FF& a) {
    FF acc = big.zero();
    for (uint32_t i = small.s(); i-- > 0;) {
        acc = big.mul(acc, root);
        acc = big.add(acc, big.from_int((long long)a[i]));
    }
    return acc;
}

} // namespace fptkit
