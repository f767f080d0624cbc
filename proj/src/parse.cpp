#include "fptkit/parse.hpp"

#include <cctype>

namespace fptkit {

namespace {

class Parser {
public:
    Parser(const Ring& R, const std::string& text) : R_(R), s_(text) {}

    Poly run() {
        Poly f = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return f;
    }

private:
    const Ring& R_;
    const std::string& s_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Poly expr() {
        bool neg = false;
        char c = peek();
        if (c == '+' || c == '-') {
            neg = (c == '-');
            ++pos_;
        }
        Poly acc = term();
        if (neg) acc = poly_neg(R_, acc);
        while (true) {
            c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                Poly t = term();
                acc = (c == '+') ? poly_add(R_, acc, t) : poly_sub(R_, acc, t);
            } else {
                return acc;
            }
        }
    }

    bool at_factor_start() {
        char c = peek();
        return c == '(' || std::isdigit((unsigned char)c) || std::isalpha((unsigned char)c);
    }

    Poly term() {
        Poly acc = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                if (!at_factor_start()) throw ParseError("expected a factor after '*'", pos_);
                acc = poly_mul(R_, acc, factor());
            } else if (at_factor_start()) {
                acc = poly_mul(R_, acc, factor());
            } else {
                return acc;
            }
        }
    }

    uint32_t exponent() {
        skip_ws();
        size_t start = pos_;
        if (pos_ >= s_.size() || !std::isdigit((unsigned char)s_[pos_]))
            throw ParseError("expected an integer exponent", pos_);
        uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
            v = v * 10 + uint64_t(s_[pos_] - '0');
            if (v >= (1ull << 31)) throw ParseError("exponent too large", start);
            ++pos_;
        }
        return uint32_t(v);
    }

    Poly factor() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            if (peek() == '^') {
                ++pos_;
                inner = poly_pow(R_, inner, exponent(), 5000000);
            }
            return inner;
        }
        if (std::isdigit((unsigned char)c)) {
            long long v = 0;
            uint32_t p = R_.F.p();
            while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
                v = (v * 10 + (s_[pos_] - '0')) % (long long)p;
                ++pos_;
            }
            return poly_const(R_, R_.F.from_int(v));
        }
        if (std::isalpha((unsigned char)c)) {
            size_t start = pos_;
            ++pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            int idx = R_.var_index(name);
            if (idx < 0) throw ParseError("unknown variable '" + name + "'", start);
            uint32_t e = 1;
            if (peek() == '^') {
                ++pos_;
                e = exponent();
            }
            return e == 0 ? poly_const(R_, R_.F.one()) : poly_var(R_, size_t(idx), e);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }
};

} // namespace

Poly parse_poly(const Ring& R, const std::string& text) { return Parser(R, text).run(); }

std::vector<Poly> parse_ideal(const Ring& R, const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    std::vector<Poly> out;
    size_t offset = 0;
    for (const auto& part : parts) {
        try {
            out.push_back(parse_poly(R, part));
        } catch (const ParseError& e) {
            size_t pos = e.position() == std::string::npos ? offset : offset + e.position();
            throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).find(" (at ")),
                             pos);
        }
        offset += part.size() + 1;
    }
    return out;
}

} // namespace fptkit
