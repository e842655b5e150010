#pragma once

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cym/cyclotomic.hpp"

namespace cym {

// A closed real interval with MPFR endpoints, every operation outward-rounded.
class RealInterval {
  public:
    explicit RealInterval(mpfr_prec_t prec = 128) : prec_(prec) {
        mpfr_init2(lo_, prec_);
        mpfr_init2(hi_, prec_);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }
    RealInterval(const RealInterval& o) : prec_(o.prec_) {
        mpfr_init2(lo_, prec_);
        mpfr_init2(hi_, prec_);
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    RealInterval(RealInterval&& o) noexcept : prec_(o.prec_) {
        mpfr_init2(lo_, prec_);
        mpfr_init2(hi_, prec_);
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }
    RealInterval& operator=(RealInterval o) {
        std::swap(prec_, o.prec_);
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        return *this;
    }
    ~RealInterval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    static RealInterval from_rational(const Rational& q, mpfr_prec_t prec) {
        RealInterval r(prec);
        mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
        return r;
    }
    static RealInterval from_long(long v, mpfr_prec_t prec) {
        RealInterval r(prec);
        mpfr_set_si(r.lo_, v, MPFR_RNDD);
        mpfr_set_si(r.hi_, v, MPFR_RNDU);
        return r;
    }

    mpfr_prec_t precision() const { return prec_; }
    const __mpfr_struct* lo() const { return lo_; }
    const __mpfr_struct* hi() const { return hi_; }

    friend RealInterval operator+(const RealInterval& a, const RealInterval& b) {
        RealInterval r(std::max(a.prec_, b.prec_));
        mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }
    friend RealInterval operator-(const RealInterval& a, const RealInterval& b) {
        RealInterval r(std::max(a.prec_, b.prec_));
        mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
        return r;
    }
    RealInterval operator-() const {
        RealInterval r(prec_);
        mpfr_neg(r.lo_, hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
        return r;
    }
    friend RealInterval operator*(const RealInterval& a, const RealInterval& b) {
        RealInterval r(std::max(a.prec_, b.prec_));
        mpfr_t t;
        mpfr_init2(t, r.prec_);
        bool first = true;
        const __mpfr_struct* as[2] = {a.lo_, a.hi_};
        const __mpfr_struct* bs[2] = {b.lo_, b.hi_};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                mpfr_mul(t, as[i], bs[j], MPFR_RNDD);
                if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
                mpfr_mul(t, as[i], bs[j], MPFR_RNDU);
                if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
                first = false;
            }
        mpfr_clear(t);
        return r;
    }

    bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
    bool definitely_positive() const { return mpfr_sgn(lo_) > 0; }
    bool definitely_negative() const { return mpfr_sgn(hi_) < 0; }
    bool overlaps(const RealInterval& o) const {
        return mpfr_cmp(hi_, o.lo_) >= 0 && mpfr_cmp(o.hi_, lo_) >= 0;
    }

    double width_double() const {
        mpfr_t w;
        mpfr_init2(w, prec_);
        mpfr_sub(w, hi_, lo_, MPFR_RNDU);
        const double d = mpfr_get_d(w, MPFR_RNDU);
        mpfr_clear(w);
        return d;
    }
    double midpoint_double() const {
        mpfr_t m;
        mpfr_init2(m, prec_);
        mpfr_add(m, lo_, hi_, MPFR_RNDN);
        mpfr_div_2ui(m, m, 1, MPFR_RNDN);
        const double d = mpfr_get_d(m, MPFR_RNDN);
        mpfr_clear(m);
        return d;
    }

    // widen both endpoints outward by the width of another interval
    void widen_by_width_of(const RealInterval& o) {
        mpfr_t w;
        mpfr_init2(w, prec_);
        mpfr_sub(w, o.hi_, o.lo_, MPFR_RNDU);
        mpfr_sub(lo_, lo_, w, MPFR_RNDD);
        mpfr_add(hi_, hi_, w, MPFR_RNDU);
        mpfr_clear(w);
    }

    // low-level access for the trig enclosures below
    mpfr_ptr raw_lo() { return lo_; }
    mpfr_ptr raw_hi() { return hi_; }

  private:
    mpfr_prec_t prec_;
    mpfr_t lo_, hi_;
};

struct ComplexInterval {
    RealInterval re, im;

    explicit ComplexInterval(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    ComplexInterval(RealInterval r, RealInterval i)
        : re(std::move(r)), im(std::move(i)) {}

    friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    bool overlaps(const ComplexInterval& o) const {
        return re.overlaps(o.re) && im.overlaps(o.im);
    }
};

namespace detail {

// Rigorous enclosure of exp(2 pi i j / m).  Exact at the four axis points;
// elsewhere cos/sin are evaluated at both endpoints of the angle enclosure and
// widened by its width (the derivative bound |cos'|, |sin'| <= 1).
inline ComplexInterval zeta_enclosure(unsigned long m, unsigned long j,
                                      mpfr_prec_t prec) {
    j %= m;
    ComplexInterval out(prec);
    // axis points are exact
    auto set_exact = [&](long re, long im) {
        out.re = RealInterval::from_long(re, prec);
        out.im = RealInterval::from_long(im, prec);
    };
    if (j == 0) {
        set_exact(1, 0);
        return out;
    }
    if (2 * j == m) {
        set_exact(-1, 0);
        return out;
    }
    if (4 * j == m) {
        set_exact(0, 1);
        return out;
    }
    if (4 * j == 3 * m) {
        set_exact(0, -1);
        return out;
    }
    RealInterval theta(prec);
    mpfr_const_pi(theta.raw_lo(), MPFR_RNDD);
    mpfr_const_pi(theta.raw_hi(), MPFR_RNDU);
    mpfr_mul_ui(theta.raw_lo(), theta.raw_lo(), 2 * j, MPFR_RNDD);
    mpfr_mul_ui(theta.raw_hi(), theta.raw_hi(), 2 * j, MPFR_RNDU);
    mpfr_div_ui(theta.raw_lo(), theta.raw_lo(), m, MPFR_RNDD);
    mpfr_div_ui(theta.raw_hi(), theta.raw_hi(), m, MPFR_RNDU);

    auto lipschitz_image = [&](int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
        RealInterval v(prec);
        mpfr_t a_lo, a_hi, b_lo, b_hi;
        mpfr_init2(a_lo, prec);
        mpfr_init2(a_hi, prec);
        mpfr_init2(b_lo, prec);
        mpfr_init2(b_hi, prec);
        fn(a_lo, theta.lo(), MPFR_RNDD);
        fn(a_hi, theta.lo(), MPFR_RNDU);
        fn(b_lo, theta.hi(), MPFR_RNDD);
        fn(b_hi, theta.hi(), MPFR_RNDU);
        mpfr_min(v.raw_lo(), a_lo, b_lo, MPFR_RNDD);
        mpfr_max(v.raw_hi(), a_hi, b_hi, MPFR_RNDU);
        mpfr_clear(a_lo);
        mpfr_clear(a_hi);
        mpfr_clear(b_lo);
        mpfr_clear(b_hi);
        v.widen_by_width_of(theta);
        return v;
    };
    out.re = lipschitz_image(mpfr_cos);
    out.im = lipschitz_image(mpfr_sin);
    return out;
}

}  // namespace detail

// Enclosure of the image of x under the embedding zeta_m -> exp(2 pi i k / m)
// (k coprime to the conductor; k = 1 is the principal embedding).
inline ComplexInterval embed(const Cyclotomic& x, unsigned long k,
                             mpfr_prec_t prec = 128) {
    const unsigned long m = x.conductor();
    if (std::gcd(k % m, m) != 1 && m > 1)
        throw std::invalid_argument("embed: index not coprime to conductor");
    ComplexInterval acc(prec);
    const auto& c = x.coefficients();
    for (unsigned long j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        ComplexInterval term = detail::zeta_enclosure(m, (j * k) % m, prec);
        const RealInterval q = RealInterval::from_rational(c[j], prec);
        term.re = term.re * q;
        term.im = term.im * q;
        acc = acc + term;
    }
    return acc;
}

// Exact sign of a real cyclotomic value under the principal embedding, by
// precision escalation (exact zero test first, so this terminates).
inline int sign_of_real(const Cyclotomic& x, mpfr_prec_t max_prec = 1u << 16) {
    if (!x.is_real()) throw std::invalid_argument("sign: value is not real");
    if (x.is_zero()) return 0;
    if (x.is_rational()) return sgn(x.rational_value());
    for (mpfr_prec_t prec = 64; prec <= max_prec; prec *= 2) {
        const ComplexInterval e = embed(x, 1, prec);
        if (e.re.definitely_positive()) return 1;
        if (e.re.definitely_negative()) return -1;
    }
    throw std::runtime_error("sign: precision cap exceeded");
}

// True when x is positive in EVERY real embedding of its field (needed for
// definiteness checks that must hold at all places).
inline bool totally_positive(const Cyclotomic& x, mpfr_prec_t max_prec = 1u << 16) {
    for (const Cyclotomic& c : galois_conjugates(x)) {
        if (!c.is_real()) throw std::invalid_argument("totally_positive: conjugate not real");
        if (sign_of_real(c, max_prec) <= 0) return false;
    }
    return true;
}

}  // namespace cym
