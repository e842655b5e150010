#pragma once

#include <map>
#include <optional>
#include <string>

#include "cym/embed.hpp"
#include "cym/linalg.hpp"

namespace cym {

struct SignatureAtEmbedding {
    unsigned long embedding = 1;  // Galois index k, one per conjugate pair
    unsigned long positive = 0;
    unsigned long negative = 0;
    unsigned long nullity = 0;
    bool operator==(const SignatureAtEmbedding& o) const {
        return embedding == o.embedding && positive == o.positive &&
               negative == o.negative && nullity == o.nullity;
    }
};

struct HermitianFormResult {
    Matrix form;
    bool definite = false;  // positive definite at every embedding
    std::vector<SignatureAtEmbedding> signatures;
};

namespace detail {

// Exact congruence diagonalization of a Hermitian matrix; returns the (real
// cyclotomic) diagonal entries.
inline std::vector<Cyclotomic> hermitian_diagonal(Matrix h) {
    const unsigned long n = h.rows();
    std::vector<Cyclotomic> diag(n);
    for (unsigned long pos = 0; pos < n; ++pos) {
        if (h(pos, pos).is_zero()) {
            // bring a nonzero diagonal entry here if one exists
            unsigned long swap_i = n;
            for (unsigned long i = pos + 1; i < n; ++i)
                if (!h(i, i).is_zero()) {
                    swap_i = i;
                    break;
                }
            if (swap_i < n) {
                for (unsigned long j = 0; j < n; ++j) std::swap(h(pos, j), h(swap_i, j));
                for (unsigned long i = 0; i < n; ++i) std::swap(h(i, pos), h(i, swap_i));
            } else {
                // all remaining diagonal entries vanish; use an off-diagonal
                // entry of this row -- row_pos += conj(t) row_j makes the
                // corner 2 |t|^2
                unsigned long j_found = n;
                for (unsigned long j = pos + 1; j < n; ++j)
                    if (!h(pos, j).is_zero()) {
                        j_found = j;
                        break;
                    }
                if (j_found == n) continue;  // zero row: null direction
                const Cyclotomic t = h(pos, j_found);
                const Cyclotomic tc = t.conj();
                for (unsigned long j = 0; j < n; ++j)
                    h(pos, j) = h(pos, j) + t * h(j_found, j);
                for (unsigned long i = 0; i < n; ++i)
                    h(i, pos) = h(i, pos) + tc * h(i, j_found);
            }
        }
        const Cyclotomic p = h(pos, pos);
        if (p.is_zero()) continue;
        for (unsigned long i = pos + 1; i < n; ++i) {
            const Cyclotomic f = h(i, pos) / p;
            if (f.is_zero()) continue;
            const Cyclotomic fc = f.conj();
            for (unsigned long j = pos; j < n; ++j)
                h(i, j) = h(i, j) - f * h(pos, j);
            for (unsigned long j = pos; j < n; ++j)
                h(j, i) = h(j, i) - fc * h(j, pos);
        }
        diag[pos] = p;
    }
    return diag;
}

}  // namespace detail

// Signature of a Hermitian matrix under each complex-conjugate pair of
// embeddings of its entry field, by exact diagonalization and rigorous sign
// determination of the diagonal entries.
inline std::vector<SignatureAtEmbedding> hermitian_signatures(const Matrix& h) {
    if (!h.is_square()) throw std::invalid_argument("signature: non-square");
    if (h != h.conj_transpose())
        throw std::invalid_argument("signature: matrix is not Hermitian");
    const std::vector<Cyclotomic> diag = detail::hermitian_diagonal(h);
    const unsigned long m = h.conductor();
    std::vector<unsigned long> reps;
    if (m == 1) {
        reps.push_back(1);
    } else {
        for (unsigned long k : detail::conductor_data(m).units)
            if (k <= m - k) reps.push_back(k);  // one per conjugate pair
    }
    std::vector<SignatureAtEmbedding> out;
    for (unsigned long k : reps) {
        SignatureAtEmbedding sig;
        sig.embedding = k;
        for (const auto& d : diag) {
            const int s = d.is_zero() ? 0 : sign_of_real(d.galois(k));
            if (s > 0)
                ++sig.positive;
            else if (s < 0)
                ++sig.negative;
            else
                ++sig.nullity;
        }
        out.push_back(sig);
    }
    return out;
}

// Find a nonzero Hermitian H with g^dagger H g = H for every generator.
// For finite groups (closure within `closure_cap` elements) the averaged form
// sum g^dagger g is returned, which is positive definite at every embedding;
// otherwise the exact fixed-point system is solved and a nonsingular Hermitian
// solution is preferred.
inline std::optional<HermitianFormResult> invariant_hermitian_form(
    const std::vector<Matrix>& mats, unsigned long closure_cap = 4096) {
    if (mats.empty()) throw std::invalid_argument("form: no generators");
    const unsigned long n = mats.front().rows();
    for (const auto& g : mats)
        if (!g.is_square() || g.rows() != n)
            throw std::invalid_argument("form: generators of unequal size");

    unsigned long m = 1;
    for (const auto& g : mats) m = lcm_ul(m, g.conductor());
    m = normalize_conductor(m);

    // try the averaging route over a bounded closure
    {
        std::map<std::string, Matrix> seen;
        std::vector<Matrix> queue{Matrix::identity(n)};
        seen.emplace(queue.front().key_at(m), queue.front());
        bool closed = true;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            for (const auto& g : mats) {
                Matrix next = queue[i] * g;
                std::string key = next.key_at(m);
                if (seen.count(key)) continue;
                if (seen.size() >= closure_cap) {
                    closed = false;
                    break;
                }
                seen.emplace(std::move(key), next);
                queue.push_back(std::move(next));
            }
            if (!closed) break;
        }
        if (closed) {
            Matrix h(n, n);
            for (const auto& g : queue) h = h + g.conj_transpose() * g;
            HermitianFormResult res;
            res.form = std::move(h);
            res.definite = true;
            res.signatures = hermitian_signatures(res.form);
            return res;
        }
    }

    // solve the stacked linear system (conj(g)^T tensor g^dagger acting on
    // vec H) = vec H over the field
    const unsigned long nn = n * n;
    Matrix sys(mats.size() * nn, nn);
    for (std::size_t gi = 0; gi < mats.size(); ++gi) {
        const Matrix gd = mats[gi].conj_transpose();
        const Matrix& g = mats[gi];
        for (unsigned long i = 0; i < n; ++i)
            for (unsigned long j = 0; j < n; ++j) {
                const unsigned long row = gi * nn + i * n + j;
                for (unsigned long a = 0; a < n; ++a)
                    for (unsigned long b = 0; b < n; ++b) {
                        Cyclotomic v = gd(i, a) * g(b, j);
                        if (a == i && b == j) v = v - Cyclotomic(1);
                        sys(row, a * n + b) = v;
                    }
            }
    }
    const auto kernel = kernel_basis(sys);
    if (kernel.empty()) return std::nullopt;

    std::optional<Matrix> first_nonzero;
    std::optional<Matrix> first_nonsingular;
    auto consider = [&](const Matrix& h) {
        if (h.is_zero()) return;
        if (!first_nonzero) first_nonzero = h;
        if (!first_nonsingular && !det(h).is_zero()) first_nonsingular = h;
    };
    for (const auto& vec : kernel) {
        Matrix h(n, n);
        for (unsigned long i = 0; i < n; ++i)
            for (unsigned long j = 0; j < n; ++j) h(i, j) = vec[i * n + j];
        const Matrix hd = h.conj_transpose();
        consider(h + hd);
        consider(Cyclotomic::zeta(4) * (h - hd));
        if (first_nonsingular) break;
    }
    const std::optional<Matrix>& pick = first_nonsingular ? first_nonsingular : first_nonzero;
    if (!pick) return std::nullopt;
    HermitianFormResult res;
    res.form = *pick;
    res.signatures = hermitian_signatures(res.form);
    res.definite = true;
    for (const auto& s : res.signatures)
        if (s.negative != 0 || s.nullity != 0) res.definite = false;
    return res;
}

}  // namespace cym
