#pragma once

#include "cym/closure.hpp"
#include "cym/field.hpp"
#include "cym/tuple.hpp"

namespace cym {

// Verdict on the smallest algebraic group containing a rank-2 tuple's image.
struct Rank2Closure {
    enum class Kind { Reducible, FiniteImage, InfiniteDihedral, ZariskiDense, Inconclusive };
    Kind kind = Kind::Inconclusive;
    unsigned long order = 0;  // set for FiniteImage
    std::string detail;
};

namespace detail {

// Unordered pair of distinct eigenlines of a non-scalar 2x2 matrix with
// distinct eigenvalues, encoded as the binary quadratic cutting them out:
//   Q(x, y) = det[(x, y), g (x, y)] up to scale.
struct LinePair {
    Cyclotomic a, b, c;  // a x^2 + b x y + c y^2
};

inline std::optional<LinePair> line_pair(const Matrix& g) {
    if (g.is_scalar()) return std::nullopt;
    const Cyclotomic disc = g.trace() * g.trace() - Cyclotomic(4) * det(g);
    if (disc.is_zero()) return std::nullopt;  // repeated eigenvalue
    return LinePair{g(1, 0), g(1, 1) - g(0, 0), -g(0, 1)};
}

inline bool preserves_pair(const Matrix& h, const LinePair& q) {
    const Cyclotomic &p = h(0, 0), &r = h(1, 0), &s = h(1, 1);
    const Cyclotomic& qq = h(0, 1);
    const Cyclotomic a2 = q.a * p * p + q.b * p * r + q.c * r * r;
    const Cyclotomic b2 =
        Cyclotomic(2) * q.a * p * qq + q.b * (p * s + qq * r) + Cyclotomic(2) * q.c * r * s;
    const Cyclotomic c2 = q.a * qq * qq + q.b * qq * s + q.c * s * s;
    return (a2 * q.b == b2 * q.a) && (a2 * q.c == c2 * q.a) && (b2 * q.c == c2 * q.b);
}

// Exact finite-order test for a 2x2 matrix: semisimple with root-of-unity
// eigenvalues.  The candidate orders are bounded through the degree of the
// field generated by trace and determinant.
inline bool has_finite_order_2x2(const Matrix& g) {
    const Cyclotomic t = g.trace();
    const Cyclotomic d = det(g);
    if (g.is_scalar()) return is_root_of_unity(g(0, 0)).has_value();
    const Cyclotomic disc = t * t - Cyclotomic(4) * d;
    if (disc.is_zero()) return false;  // nontrivial unipotent part
    if (!is_root_of_unity(d)) return false;
    const unsigned long deg = subfield_descriptor({t, d}).degree;
    const unsigned long bound = 2 * deg;
    // phi(N) <= bound forces N <= 2 bound^2 (phi(N) >= sqrt(N/2))
    const unsigned long nmax = 2 * bound * bound + 6;
    for (unsigned long order = 1; order <= nmax; ++order) {
        if (detail::euler_phi(order) > bound) continue;
        for (unsigned long e = 0; e < order; ++e) {
            if (order > 1 && gcd_ul(e, order) != 1) continue;
            const Cyclotomic lam = Cyclotomic::zeta_power(order, static_cast<long>(e));
            if (lam * lam - t * lam + d == Cyclotomic(0)) return true;
            if (order == 1) break;
        }
    }
    return false;
}

}  // namespace detail

inline Rank2Closure classify_rank2_closure(const MonodromyTuple& t,
                                           unsigned long closure_cap = 4096) {
    if (t.rank != 2) throw std::invalid_argument("classify_rank2_closure: rank must be 2");
    TupleCheck check = validate_tuple(t);
    if (!check.ok())
        throw std::invalid_argument("classify_rank2_closure: " + check.violations.front());

    Rank2Closure out;
    if (!is_irreducible(t)) {
        out.kind = Rank2Closure::Kind::Reducible;
        out.detail = "entries share an eigenline";
        return out;
    }

    GroupClosure cl = closure(t.mats, closure_cap);
    if (cl.completed) {
        out.kind = Rank2Closure::Kind::FiniteImage;
        out.order = cl.order();
        out.detail = "multiplicative closure complete";
        return out;
    }

    // words of length <= 2 in the entries
    std::vector<Matrix> words = t.mats;
    for (const auto& g : t.mats)
        for (const auto& h : t.mats) words.push_back(g * h);

    bool infinite = false;
    std::string why;
    for (const auto& w : words) {
        if (!w.is_scalar() && (w.trace() * w.trace() - Cyclotomic(4) * det(w)).is_zero()) {
            infinite = true;
            why = "word with a nontrivial unipotent part";
            break;
        }
        if (!detail::has_finite_order_2x2(w)) {
            infinite = true;
            why = "word with an eigenvalue of infinite order";
            break;
        }
    }

    bool preserved = false;
    for (const auto& w : words) {
        auto pair = detail::line_pair(w);
        if (!pair) continue;
        bool all = true;
        for (const auto& g : t.mats)
            if (!detail::preserves_pair(g, *pair)) {
                all = false;
                break;
            }
        if (all) {
            preserved = true;
            break;
        }
    }

    if (preserved && infinite) {
        out.kind = Rank2Closure::Kind::InfiniteDihedral;
        out.detail = why + "; a pair of lines is permuted by every entry";
    } else if (!preserved && infinite) {
        out.kind = Rank2Closure::Kind::ZariskiDense;
        out.detail = why + "; no invariant line pair among short words";
    } else {
        out.kind = Rank2Closure::Kind::Inconclusive;
        out.detail = "closure cap of " + std::to_string(closure_cap) +
                     " exceeded without an infinite-order certificate";
    }
    return out;
}

}  // namespace cym
