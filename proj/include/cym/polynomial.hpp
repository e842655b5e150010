#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "cym/rational.hpp"

namespace cym {

// Dense univariate polynomial over a field K.  K needs +,-,*,/ and an
// is_zero-compatible equality with K(0)/K(1) constructible from int.
template <class K>
struct Poly {
    std::vector<K> c;  // c[i] is the coefficient of x^i; trailing zeros trimmed

    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c(std::move(coeffs)) { trim(); }
    static Poly constant(K v) { return Poly(std::vector<K>{std::move(v)}); }
    static Poly x_power(std::size_t n, K lead = K(1)) {
        std::vector<K> v(n + 1, K(0));
        v[n] = std::move(lead);
        return Poly(std::move(v));
    }

    void trim() {
        while (!c.empty() && c.back() == K(0)) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    // degree of the zero polynomial is reported as -1
    long degree() const { return static_cast<long>(c.size()) - 1; }
    const K& lead() const {
        if (c.empty()) throw std::logic_error("poly: lead of zero");
        return c.back();
    }
    K at(std::size_t i) const { return i < c.size() ? c[i] : K(0); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> v(std::max(a.c.size(), b.c.size()), K(0));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.at(i) + b.at(i);
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<K> v(std::max(a.c.size(), b.c.size()), K(0));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.at(i) - b.at(i);
        return Poly(std::move(v));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> v(a.c.size() + b.c.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j) v[i + j] = v[i + j] + a.c[i] * b.c[j];
        return Poly(std::move(v));
    }
    Poly scaled(const K& s) const {
        std::vector<K> v = c;
        for (auto& e : v) e = e * s;
        return Poly(std::move(v));
    }
    bool operator==(const Poly& o) const { return c == o.c; }

    K eval(const K& x) const {
        K acc(0);
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    }

    Poly derivative() const {
        if (c.size() <= 1) return Poly();
        std::vector<K> v(c.size() - 1, K(0));
        for (std::size_t i = 1; i < c.size(); ++i) v[i - 1] = c[i] * K(static_cast<int>(i));
        return Poly(std::move(v));
    }
};

template <class K>
struct PolyDivMod {
    Poly<K> quot, rem;
};

template <class K>
PolyDivMod<K> divmod(const Poly<K>& a, const Poly<K>& b) {
    if (b.is_zero()) throw std::invalid_argument("poly: division by zero polynomial");
    Poly<K> r = a;
    std::vector<K> q(a.c.size() > b.c.size() ? a.c.size() - b.c.size() + 1 : 1, K(0));
    const K inv_lead = K(1) / b.lead();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
        const K f = r.lead() * inv_lead;
        q[shift] = q[shift] + f;
        for (std::size_t i = 0; i < b.c.size(); ++i)
            r.c[shift + i] = r.c[shift + i] - f * b.c[i];
        r.trim();
    }
    return {Poly<K>(std::move(q)), std::move(r)};
}

template <class K>
Poly<K> make_monic(const Poly<K>& p) {
    if (p.is_zero()) return p;
    return p.scaled(K(1) / p.lead());
}

template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        Poly<K> r = divmod(a, b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

// Extended gcd: returns (g, u, v) monic with u*a + v*b = g.
template <class K>
struct PolyXgcd {
    Poly<K> g, u, v;
};

template <class K>
PolyXgcd<K> poly_xgcd(Poly<K> a, Poly<K> b) {
    Poly<K> u0 = Poly<K>::constant(K(1)), v0;
    Poly<K> u1, v1 = Poly<K>::constant(K(1));
    while (!b.is_zero()) {
        auto dm = divmod(a, b);
        Poly<K> u2 = u0 - dm.quot * u1;
        Poly<K> v2 = v0 - dm.quot * v1;
        a = std::move(b);
        b = std::move(dm.rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (a.is_zero()) return {a, u0, v0};
    const K s = K(1) / a.lead();
    return {a.scaled(s), u0.scaled(s), v0.scaled(s)};
}

}  // namespace cym
