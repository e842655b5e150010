#pragma once

#include <optional>

#include "cym/matrix.hpp"
#include "cym/polynomial.hpp"

namespace cym {

// Row echelon form produced by fraction-free (Bareiss) elimination: rows are
// scaled by leading minors rather than normalized, which keeps every exact
// division small.  Column order is fixed (leftmost pivot); the row used for
// each pivot is the lightest available one.
struct EchelonForm {
    Matrix m;
    std::vector<unsigned long> pivot_cols;
    unsigned long rank = 0;
    int swap_sign = 1;
    Cyclotomic last_pivot;  // equals det * swap_sign for square full-rank input
};

inline EchelonForm echelon(Matrix a) {
    EchelonForm out;
    const unsigned long rows = a.rows(), cols = a.cols();
    Cyclotomic prev(1);
    unsigned long r = 0;
    for (unsigned long col = 0; col < cols && r < rows; ++col) {
        unsigned long best = rows;
        std::size_t best_w = 0;
        for (unsigned long i = r; i < rows; ++i) {
            if (a(i, col).is_zero()) continue;
            const std::size_t w = entry_weight(a(i, col));
            if (best == rows || w < best_w) {
                best = i;
                best_w = w;
            }
        }
        if (best == rows) continue;  // free column
        if (best != r) {
            for (unsigned long j = 0; j < cols; ++j) {
                Cyclotomic t = a(r, j);
                a(r, j) = a(best, j);
                a(best, j) = t;
            }
            out.swap_sign = -out.swap_sign;
        }
        const Cyclotomic p = a(r, col);
        for (unsigned long i = r + 1; i < rows; ++i) {
            const Cyclotomic f = a(i, col);
            for (unsigned long j = col + 1; j < cols; ++j) {
                if (a(i, j).is_zero() && f.is_zero()) continue;
                a(i, j) = (p * a(i, j) - f * a(r, j)) / prev;
            }
            a(i, col) = Cyclotomic(0);
        }
        prev = p;
        out.pivot_cols.push_back(col);
        ++r;
    }
    out.rank = r;
    out.last_pivot = prev;
    out.m = std::move(a);
    return out;
}

inline unsigned long rank(const Matrix& a) { return echelon(a).rank; }

inline Cyclotomic det(const Matrix& a) {
    if (!a.is_square()) throw std::invalid_argument("det: non-square matrix");
    if (a.rows() == 0) return Cyclotomic(1);
    const EchelonForm e = echelon(a);
    if (e.rank < a.rows()) return Cyclotomic(0);
    return e.swap_sign == 1 ? e.last_pivot : -e.last_pivot;
}

// Basis of the right kernel {v : A v = 0}, one vector per free column,
// ordered by free column index; the free coordinate is set to 1.
inline std::vector<std::vector<Cyclotomic>> kernel_basis(const Matrix& a) {
    const unsigned long cols = a.cols();
    const EchelonForm e = echelon(a);
    std::vector<bool> is_pivot(cols, false);
    for (unsigned long c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Cyclotomic>> basis;
    for (unsigned long f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Cyclotomic> v(cols);
        v[f] = Cyclotomic(1);
        for (unsigned long rr = e.rank; rr-- > 0;) {
            const unsigned long pc = e.pivot_cols[rr];
            if (pc > f) continue;  // later free coordinate is zero here
            Cyclotomic s;
            for (unsigned long j = pc + 1; j <= f; ++j)
                if (!e.m(rr, j).is_zero() && !v[j].is_zero())
                    s = s + e.m(rr, j) * v[j];
            v[pc] = -s / e.m(rr, pc);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Fully reduced row echelon form (unit pivots, zeros above and below).
struct ReducedEchelon {
    Matrix m;
    std::vector<unsigned long> pivot_cols;
    unsigned long rank = 0;
};

inline ReducedEchelon reduced_echelon(const Matrix& a) {
    EchelonForm e = echelon(a);
    ReducedEchelon out;
    out.pivot_cols = e.pivot_cols;
    out.rank = e.rank;
    Matrix& m = e.m;
    const unsigned long cols = m.cols();
    for (unsigned long r = 0; r < out.rank; ++r) {
        const unsigned long pc = out.pivot_cols[r];
        const Cyclotomic inv = m(r, pc).inverse();
        for (unsigned long j = pc; j < cols; ++j)
            if (!m(r, j).is_zero()) m(r, j) = m(r, j) * inv;
        for (unsigned long i = 0; i < r; ++i) {
            const Cyclotomic f = m(i, pc);
            if (f.is_zero()) continue;
            for (unsigned long j = pc; j < cols; ++j)
                if (!m(r, j).is_zero()) m(i, j) = m(i, j) - f * m(r, j);
        }
    }
    // drop the zero rows
    Matrix compact(out.rank, cols);
    for (unsigned long r = 0; r < out.rank; ++r)
        for (unsigned long j = 0; j < cols; ++j) compact(r, j) = m(r, j);
    out.m = std::move(compact);
    return out;
}

inline std::optional<Matrix> try_inverse(const Matrix& a) {
    if (!a.is_square()) throw std::invalid_argument("inverse: non-square matrix");
    const unsigned long n = a.rows();
    Matrix aug(n, 2 * n);
    for (unsigned long i = 0; i < n; ++i) {
        for (unsigned long j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = Cyclotomic(1);
    }
    const ReducedEchelon re = reduced_echelon(aug);
    if (re.rank < n || re.pivot_cols[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (unsigned long i = 0; i < n; ++i)
        for (unsigned long j = 0; j < n; ++j) inv(i, j) = re.m(i, n + j);
    return inv;
}

inline Matrix inverse(const Matrix& a) {
    auto inv = try_inverse(a);
    if (!inv) throw std::domain_error("inverse: singular matrix");
    return *inv;
}

inline Matrix Matrix::pow(long e) const {
    if (!is_square()) throw std::invalid_argument("pow: non-square matrix");
    if (e < 0) return cym::inverse(*this).pow(-e);
    Matrix acc = Matrix::identity(rows());
    Matrix base = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return acc;
}

// Characteristic polynomial (monic, degree n) by the Faddeev–LeVerrier
// recurrence; exact over any characteristic-zero field.
inline Poly<Cyclotomic> char_poly(const Matrix& a) {
    if (!a.is_square()) throw std::invalid_argument("char_poly: non-square matrix");
    const unsigned long n = a.rows();
    std::vector<Cyclotomic> c(n + 1);
    c[n] = Cyclotomic(1);
    Matrix m = Matrix::identity(n);
    for (unsigned long k = 1; k <= n; ++k) {
        if (k > 1) {
            Matrix shifted = m;
            for (unsigned long i = 0; i < n; ++i)
                shifted(i, i) = shifted(i, i) + c[n - k + 1];
            m = a * shifted;
        } else {
            m = a;
        }
        c[n - k] = -(m.trace() / Cyclotomic(static_cast<int>(k)));
    }
    return Poly<Cyclotomic>(std::move(c));
}

inline Matrix eval_at_matrix(const Poly<Cyclotomic>& p, const Matrix& a) {
    if (!a.is_square()) throw std::invalid_argument("eval: non-square matrix");
    const unsigned long n = a.rows();
    Matrix acc(n, n);
    for (std::size_t i = p.c.size(); i-- > 0;) {
        acc = acc * a;
        acc = acc + Matrix::scalar(n, p.c[i]);
    }
    return acc;
}

}  // namespace cym
