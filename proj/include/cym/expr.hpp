#pragma once

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cym/cyclotomic.hpp"

namespace cym {

// Exact expression grammar over one root-of-unity symbol:
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)?
//   atom   := 'z' | rational | '(' expr ')'
//   rational := uint ('/' uint)?
//
// 'z' denotes the primitive root of unity of the ambient conductor.
// Whitespace is ignored between tokens.

namespace detail {

class ExprParser {
  public:
    ExprParser(const std::string& s, unsigned long conductor)
        : s_(s), pos_(0), cond_(conductor) {}

    Cyclotomic run() {
        Cyclotomic v = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream os;
        os << "parse error at position " << pos_ << ": " << what;
        throw std::invalid_argument(os.str());
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Cyclotomic parse_expr() {
        bool neg = false;
        skip_ws();
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Cyclotomic acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+'))
                acc = acc + parse_term();
            else if (eat('-'))
                acc = acc - parse_term();
            else
                break;
        }
        return acc;
    }

    Cyclotomic parse_term() {
        Cyclotomic acc = parse_factor();
        while (eat('*')) acc = acc * parse_factor();
        return acc;
    }

    Cyclotomic parse_factor() {
        Cyclotomic base = parse_atom();
        if (eat('^')) {
            const unsigned long e = parse_uint();
            base = base.pow(static_cast<long>(e));
        }
        return base;
    }

    Cyclotomic parse_atom() {
        const char c = peek();
        if (c == 'z') {
            ++pos_;
            return Cyclotomic::zeta(cond_);
        }
        if (c == '(') {
            ++pos_;
            Cyclotomic v = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Cyclotomic(parse_rational_tok());
        fail("expected 'z', a rational, or '('");
    }

    unsigned long parse_uint() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected an unsigned integer");
        unsigned long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + static_cast<unsigned long>(s_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    Rational parse_rational_tok() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        std::string num = s_.substr(start, pos_ - start);
        std::string den = "1";
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            const std::size_t dstart = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (pos_ == dstart) fail("expected denominator digits");
            den = s_.substr(dstart, pos_ - dstart);
        }
        Rational r{Integer(num), Integer(den)};
        if (r.get_den() == 0) fail("zero denominator");
        r.canonicalize();
        return r;
    }

    const std::string& s_;
    std::size_t pos_;
    unsigned long cond_;
};

inline void append_term(std::string& out, const Rational& coeff, unsigned long j,
                        bool first) {
    Rational mag = coeff < 0 ? Rational(-coeff) : coeff;
    if (first) {
        if (coeff < 0) out += '-';
    } else {
        out += coeff < 0 ? '-' : '+';
    }
    const bool unit = (mag == 1);
    if (j == 0) {
        out += to_string(mag);
        return;
    }
    if (!unit) {
        out += to_string(mag);
        out += '*';
    }
    out += 'z';
    if (j != 1) {
        out += '^';
        out += std::to_string(j);
    }
}

}  // namespace detail

// Evaluate an expression with z = zeta_conductor.
inline Cyclotomic parse_cyclotomic(const std::string& s, unsigned long conductor) {
    return detail::ExprParser(s, normalize_conductor(conductor)).run();
}

// Canonical rendering at an ambient conductor m (which the minimal conductor
// of x must divide): terms in descending powers of z = zeta_m, coefficients in
// lowest terms, unit coefficients left implicit.
inline std::string format_at(const Cyclotomic& x, unsigned long m) {
    m = normalize_conductor(m);
    const std::vector<Rational> c = x.coefficients_at(m);
    std::string out;
    bool first = true;
    for (std::size_t idx = c.size(); idx-- > 0;) {
        if (c[idx] == 0) continue;
        detail::append_term(out, c[idx], static_cast<unsigned long>(idx), first);
        first = false;
    }
    if (first) out = "0";
    return out;
}

// Rendering at the minimal conductor.
inline std::string canonical_string(const Cyclotomic& x) {
    return format_at(x, x.conductor());
}

// Total structural order (conductor, then coefficients); NOT a numeric order.
struct StructuralLess {
    bool operator()(const Cyclotomic& a, const Cyclotomic& b) const {
        if (a.conductor() != b.conductor()) return a.conductor() < b.conductor();
        const auto& x = a.coefficients();
        const auto& y = b.coefficients();
        for (std::size_t i = 0; i < x.size(); ++i) {
            const int c = cmp(x[i], y[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }
};

}  // namespace cym
