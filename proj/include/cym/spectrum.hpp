#pragma once

#include <algorithm>
#include <optional>
#include <utility>

#include "cym/linalg.hpp"

namespace cym {

struct NotQuasiUnipotentError : std::domain_error {
    explicit NotQuasiUnipotentError(const std::string& what)
        : std::domain_error(what) {}
};

// Result of scanning the characteristic polynomial for root-of-unity
// eigenvalues of order at most the bound.  When quasi_unipotent is false,
// `leftover` is the (monic) factor of the characteristic polynomial whose
// roots were not explained.
struct SpectrumResult {
    bool quasi_unipotent = false;
    std::vector<RootOfUnity> eigenvalues;  // sorted, repeated per multiplicity
    Poly<Cyclotomic> leftover;
};

namespace detail {

inline Poly<Cyclotomic> cyclotomic_poly_over_field(unsigned long d) {
    const Poly<Rational> p = cyclotomic_poly(d);
    std::vector<Cyclotomic> c(p.c.size());
    for (std::size_t i = 0; i < p.c.size(); ++i) c[i] = Cyclotomic(p.c[i]);
    return Poly<Cyclotomic>(std::move(c));
}

}  // namespace detail

inline SpectrumResult root_of_unity_spectrum(const Matrix& a,
                                             unsigned long order_bound = 240) {
    if (!a.is_square()) throw std::invalid_argument("spectrum: non-square matrix");
    Poly<Cyclotomic> q = char_poly(a);
    if (q.at(0).is_zero())
        throw std::invalid_argument("spectrum: matrix is singular");
    SpectrumResult out;
    for (unsigned long d = 1; d <= order_bound && q.degree() > 0; ++d) {
        // cheap filter: a primitive d-th root is an eigenvalue iff
        // gcd(q, Phi_d) is non-constant, and that is field-independent
        const Poly<Cyclotomic> phi = detail::cyclotomic_poly_over_field(d);
        if (poly_gcd(q, phi).degree() <= 0) continue;
        for (unsigned long e = 0; e < d && q.degree() > 0; ++e) {
            if (d > 1 && std::gcd(e, d) != 1) continue;
            if (d > 1 && e == 0) continue;
            const Cyclotomic beta = Cyclotomic::zeta_power(d, static_cast<long>(e));
            const Poly<Cyclotomic> lin(
                std::vector<Cyclotomic>{-beta, Cyclotomic(1)});
            while (true) {
                auto dm = divmod(q, lin);
                if (!dm.rem.is_zero()) break;
                q = std::move(dm.quot);
                out.eigenvalues.emplace_back(d, static_cast<long>(e));
            }
        }
    }
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
    out.quasi_unipotent = q.degree() <= 0;
    out.leftover = make_monic(q);
    return out;
}

struct JordanBlock {
    RootOfUnity eigenvalue;
    unsigned long size = 1;
    bool operator==(const JordanBlock& o) const {
        return eigenvalue == o.eigenvalue && size == o.size;
    }
    bool operator<(const JordanBlock& o) const {
        if (!(eigenvalue == o.eigenvalue)) return eigenvalue < o.eigenvalue;
        return size < o.size;
    }
};

struct JordanData {
    std::vector<JordanBlock> blocks;  // sorted canonically
    unsigned long ambient_rank = 0;
    bool operator==(const JordanData& o) const {
        return blocks == o.blocks && ambient_rank == o.ambient_rank;
    }
};

inline JordanData jordan_data(const Matrix& a, unsigned long order_bound = 240) {
    const SpectrumResult spec = root_of_unity_spectrum(a, order_bound);
    if (!spec.quasi_unipotent)
        throw NotQuasiUnipotentError("jordan_data: eigenvalues beyond the order bound");
    const unsigned long n = a.rows();
    JordanData out;
    out.ambient_rank = n;
    for (std::size_t i = 0; i < spec.eigenvalues.size();) {
        const RootOfUnity beta = spec.eigenvalues[i];
        std::size_t mult = 0;
        while (i < spec.eigenvalues.size() && spec.eigenvalues[i] == beta) {
            ++mult;
            ++i;
        }
        const Matrix p = a - Matrix::scalar(n, beta.value());
        // kernel dimensions of successive powers give the block-size profile
        std::vector<unsigned long> kdim{0};
        Matrix pk = Matrix::identity(n);
        while (kdim.back() < mult) {
            pk = pk * p;
            kdim.push_back(n - rank(pk));
        }
        for (std::size_t j = 1; j < kdim.size(); ++j) {
            const unsigned long ge_j = kdim[j] - kdim[j - 1];
            const unsigned long ge_j1 =
                j + 1 < kdim.size() ? kdim[j + 1] - kdim[j] : 0;
            // when kdim stabilized early the tail contributes nothing
            const unsigned long exactly =
                kdim.back() >= mult && j + 1 == kdim.size() ? ge_j : ge_j - ge_j1;
            for (unsigned long b = 0; b < exactly; ++b)
                out.blocks.push_back({beta, j});
        }
    }
    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

inline bool is_pseudoreflection(const Matrix& a) {
    if (!a.is_square()) throw std::invalid_argument("pseudoreflection: non-square");
    return rank(a - Matrix::identity(a.rows())) == 1;
}

// If mu^{-1} A is a pseudoreflection for some root of unity mu of order within
// the bound, return (mu, mu^{-1} A).  Candidate mu are the root-of-unity
// eigenvalues of multiplicity >= n-1, smallest order first.
inline std::optional<std::pair<RootOfUnity, Matrix>> scalar_pseudoreflection_split(
    const Matrix& a, unsigned long order_bound = 240) {
    if (!a.is_square() || a.rows() == 0)
        throw std::invalid_argument("split: non-square matrix");
    const unsigned long n = a.rows();
    const SpectrumResult spec = root_of_unity_spectrum(a, order_bound);
    std::vector<RootOfUnity> candidates;
    for (std::size_t i = 0; i < spec.eigenvalues.size();) {
        std::size_t j = i;
        while (j < spec.eigenvalues.size() && spec.eigenvalues[j] == spec.eigenvalues[i])
            ++j;
        if (j - i + 1 >= n) candidates.push_back(spec.eigenvalues[i]);
        i = j;
    }
    for (const RootOfUnity& mu : candidates) {
        const Matrix r = mu.inverse().value() * a;
        if (is_pseudoreflection(r)) return std::make_pair(mu, r);
    }
    return std::nullopt;
}

}  // namespace cym
