#pragma once

#include <string>

#include "cym/linalg.hpp"

namespace cym {

// A tuple (A_1, ..., A_n) of invertible r x r matrices with product identity;
// the last slot is the distinguished point at infinity, the others are the
// finite punctures in order.
struct MonodromyTuple {
    unsigned long rank = 0;
    std::vector<Matrix> mats;

    unsigned long points() const { return static_cast<unsigned long>(mats.size()); }
    const Matrix& at_infinity() const { return mats.back(); }
};

struct TupleCheck {
    std::vector<std::string> violations;
    bool all_scalar = false;  // degenerate but not invalid on its own
    bool ok() const { return violations.empty(); }
};

inline TupleCheck validate_tuple(const MonodromyTuple& t) {
    TupleCheck out;
    if (t.mats.empty()) {
        out.violations.push_back("tuple has no points");
        return out;
    }
    for (std::size_t i = 0; i < t.mats.size(); ++i) {
        const Matrix& a = t.mats[i];
        if (!a.is_square() || a.rows() != t.rank) {
            out.violations.push_back("entry " + std::to_string(i + 1) +
                                     " is not square of the declared rank");
            return out;
        }
    }
    Matrix prod = Matrix::identity(t.rank);
    for (std::size_t i = 0; i < t.mats.size(); ++i) {
        if (det(t.mats[i]).is_zero())
            out.violations.push_back("entry " + std::to_string(i + 1) + " is singular");
        else
            prod = prod * t.mats[i];
    }
    if (out.violations.empty() && !prod.is_identity())
        out.violations.push_back("product of entries is not the identity");
    out.all_scalar = true;
    for (const auto& a : t.mats)
        if (!a.is_scalar()) {
            out.all_scalar = false;
            break;
        }
    return out;
}

// sigma_i exchanges slots i, i+1 (1-indexed, i < n):
//   forward: (A_i, A_{i+1}) -> (A_i A_{i+1} A_i^{-1}, A_i)
//   inverse: (A_i, A_{i+1}) -> (A_{i+1}, A_{i+1}^{-1} A_i A_{i+1})
inline MonodromyTuple hurwitz_move(const MonodromyTuple& t, unsigned long i,
                                   bool inverse_direction = false) {
    if (i < 1 || i >= t.points())
        throw std::invalid_argument("hurwitz_move: index out of range");
    MonodromyTuple out = t;
    Matrix& a = out.mats[i - 1];
    Matrix& b = out.mats[i];
    if (!inverse_direction) {
        Matrix moved = a * b * inverse(a);
        b = a;
        a = std::move(moved);
    } else {
        Matrix moved = inverse(b) * a * b;
        a = out.mats[i];
        b = std::move(moved);
    }
    return out;
}

// Conjugation-invariant coordinates: traces of all words of length <= 3 with
// strictly increasing indices.  Faithful on irreducible rank-2 tuples.
struct TraceKey {
    unsigned long n = 0;
    unsigned long rank = 0;
    std::vector<Cyclotomic> values;

    bool operator==(const TraceKey& o) const {
        return n == o.n && rank == o.rank && values == o.values;
    }
    bool operator<(const TraceKey& o) const {
        if (n != o.n) return n < o.n;
        if (rank != o.rank) return rank < o.rank;
        StructuralLess less;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (less(values[i], o.values[i])) return true;
            if (less(o.values[i], values[i])) return false;
        }
        return false;
    }
};

namespace detail {

inline TraceKey trace_key_unchecked(const MonodromyTuple& t) {
    TraceKey key;
    key.n = t.points();
    key.rank = t.rank;
    const std::size_t n = t.mats.size();
    for (std::size_t i = 0; i < n; ++i) key.values.push_back(t.mats[i].trace());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            key.values.push_back((t.mats[i] * t.mats[j]).trace());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Matrix ij = t.mats[i] * t.mats[j];
            for (std::size_t k = j + 1; k < n; ++k)
                key.values.push_back((ij * t.mats[k]).trace());
        }
    return key;
}

}  // namespace detail

// Burnside criterion: the tuple acts irreducibly iff its entries generate the
// full matrix algebra.
inline bool is_irreducible(const MonodromyTuple& t) {
    const unsigned long r = t.rank;
    const unsigned long dim = r * r;
    // weak echelon basis of the span, rows keyed by leftmost pivot
    std::vector<std::vector<Cyclotomic>> rows;          // sorted by pivot col
    std::vector<unsigned long> pivots;
    auto try_insert = [&](std::vector<Cyclotomic> v) -> bool {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Cyclotomic& c = v[pivots[i]];
            if (!c.is_zero())
                for (unsigned long j = 0; j < dim; ++j)
                    if (!rows[i][j].is_zero()) v[j] = v[j] - c * rows[i][j];
        }
        unsigned long p = dim;
        for (unsigned long j = 0; j < dim; ++j)
            if (!v[j].is_zero()) {
                p = j;
                break;
            }
        if (p == dim) return false;
        const Cyclotomic inv = v[p].inverse();
        for (unsigned long j = p; j < dim; ++j)
            if (!v[j].is_zero()) v[j] = v[j] * inv;
        std::size_t pos = 0;
        while (pos < pivots.size() && pivots[pos] < p) ++pos;
        rows.insert(rows.begin() + static_cast<long>(pos), std::move(v));
        pivots.insert(pivots.begin() + static_cast<long>(pos), p);
        return true;
    };
    auto flatten = [&](const Matrix& m) {
        std::vector<Cyclotomic> v(dim);
        for (unsigned long i = 0; i < r; ++i)
            for (unsigned long j = 0; j < r; ++j) v[i * r + j] = m(i, j);
        return v;
    };
    std::vector<Matrix> frontier{Matrix::identity(r)};
    try_insert(flatten(frontier.front()));
    for (std::size_t q = 0; q < frontier.size() && rows.size() < dim; ++q) {
        for (const auto& g : t.mats) {
            Matrix next = g * frontier[q];
            if (try_insert(flatten(next))) frontier.push_back(std::move(next));
            if (rows.size() == dim) break;
        }
    }
    return rows.size() == dim;
}

inline TraceKey trace_key(const MonodromyTuple& t) {
    if (t.rank != 2)
        throw std::invalid_argument("trace_key: only rank-2 keys are faithful");
    if (!is_irreducible(t))
        throw std::invalid_argument("trace_key: tuple is reducible");
    return detail::trace_key_unchecked(t);
}

struct RankOneTwist {
    std::vector<Cyclotomic> scalars;
};

inline MonodromyTuple twist(const MonodromyTuple& t, const RankOneTwist& tw) {
    if (tw.scalars.size() != t.mats.size())
        throw std::invalid_argument("twist: length mismatch");
    Cyclotomic prod(1);
    for (const auto& c : tw.scalars) {
        if (c.is_zero()) throw std::invalid_argument("twist: zero scalar");
        prod = prod * c;
    }
    if (prod != Cyclotomic(1))
        throw std::invalid_argument("twist: scalars do not multiply to 1");
    MonodromyTuple out = t;
    for (std::size_t i = 0; i < out.mats.size(); ++i)
        out.mats[i] = tw.scalars[i] * out.mats[i];
    return out;
}

inline RankOneTwist inverse_twist(const RankOneTwist& tw) {
    RankOneTwist out;
    for (const auto& c : tw.scalars) out.scalars.push_back(c.inverse());
    return out;
}

// Merge adjacent punctures: i < n merges slots i, i+1 into A_i A_{i+1};
// i = n is the wrap case (A_n A_1, A_2, ..., A_{n-1}).
inline MonodromyTuple coalesce(const MonodromyTuple& t, unsigned long i) {
    const unsigned long n = t.points();
    if (n <= 2) throw std::invalid_argument("coalesce: too few points");
    if (i < 1 || i > n) throw std::invalid_argument("coalesce: index out of range");
    MonodromyTuple out;
    out.rank = t.rank;
    if (i < n) {
        for (unsigned long j = 0; j + 1 <= n; ++j) {
            if (j + 1 == i) {
                out.mats.push_back(t.mats[j] * t.mats[j + 1]);
                ++j;
            } else {
                out.mats.push_back(t.mats[j]);
            }
        }
    } else {
        out.mats.push_back(t.mats[n - 1] * t.mats[0]);
        for (unsigned long j = 1; j + 1 < n; ++j) out.mats.push_back(t.mats[j]);
    }
    return out;
}

}  // namespace cym
