#pragma once

// Shared matrix-tuple fixtures for the test binaries.

#include <random>
#include <vector>

#include "cym/convolution.hpp"
#include "cym/tuple.hpp"

namespace fixtures {

inline cym::Matrix mat2(const cym::Cyclotomic& a, const cym::Cyclotomic& b,
                        const cym::Cyclotomic& c, const cym::Cyclotomic& d) {
    cym::Matrix m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

inline cym::Matrix mat_from(const std::vector<std::vector<cym::Cyclotomic>>& grid) {
    cym::Matrix m(grid.size(), grid.front().size());
    for (unsigned long i = 0; i < m.rows(); ++i)
        for (unsigned long j = 0; j < m.cols(); ++j) m(i, j) = grid[i][j];
    return m;
}

inline cym::Matrix int4(int g[4][4]) {
    cym::Matrix m(4, 4);
    for (unsigned long i = 0; i < 4; ++i)
        for (unsigned long j = 0; j < 4; ++j) m(i, j) = cym::Cyclotomic(g[i][j]);
    return m;
}

inline cym::MonodromyTuple close_up(std::vector<cym::Matrix> mats) {
    cym::Matrix prod = cym::Matrix::identity(mats.front().rows());
    for (const auto& m : mats) prod = prod * m;
    mats.push_back(cym::inverse(prod));
    cym::MonodromyTuple t;
    t.rank = mats.front().rows();
    t.mats = std::move(mats);
    return t;
}

// Six signed permutation reflections with product one; the last entry is the
// negative of a reflection, so its lone +1 eigenvalue sits against three -1s.
inline cym::MonodromyTuple six_reflection_tuple() {
    int g1[4][4] = {{0, -1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    int g2[4][4] = {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    int g3[4][4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}, {0, 0, -1, 0}};
    int g4[4][4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    int g5[4][4] = {{0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}};
    int g6[4][4] = {{0, 0, 1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}};
    cym::MonodromyTuple t;
    t.rank = 4;
    t.mats = {int4(g1), int4(g2), int4(g3), int4(g4), int4(g5), int4(g6)};
    return t;
}

// Monomial rank-3 tuple built from two commuting swap pairs; parameters are
// eighth roots of unity chosen so the product is a scalar times a
// pseudoreflection.
inline cym::MonodromyTuple monomial_rank3_tuple() {
    const cym::Cyclotomic a = cym::Cyclotomic::zeta_power(8, 3);
    const cym::Cyclotomic b = cym::Cyclotomic::zeta(8);
    const cym::Cyclotomic c = cym::Cyclotomic::zeta(8);
    const cym::Cyclotomic d = cym::Cyclotomic::zeta_power(8, 3);
    const cym::Cyclotomic z;
    const cym::Cyclotomic u(1);
    const cym::Matrix s1 = mat_from({{z, a, z}, {a.inverse(), z, z}, {z, z, u}});
    const cym::Matrix s2 = mat_from({{z, b, z}, {b.inverse(), z, z}, {z, z, u}});
    const cym::Matrix s3 = mat_from({{u, z, z}, {z, z, c}, {z, c.inverse(), z}});
    const cym::Matrix s4 = mat_from({{u, z, z}, {z, z, d}, {z, d.inverse(), z}});
    return close_up({s1, s2, s3, s4});
}

inline cym::Matrix rand_monomial2(std::mt19937& rng, unsigned long m) {
    std::uniform_int_distribution<long> de(0, static_cast<long>(m) - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    const cym::Cyclotomic x = cym::Cyclotomic::zeta_power(m, de(rng));
    const cym::Cyclotomic y = cym::Cyclotomic::zeta_power(m, de(rng));
    if (coin(rng)) return mat2(x, 0, 0, y);
    return mat2(0, x, y, 0);
}

inline cym::MonodromyTuple random_quasi_unipotent(std::mt19937& rng,
                                                  unsigned long n_points,
                                                  unsigned long m) {
    for (;;) {
        std::vector<cym::Matrix> mats;
        for (unsigned long i = 0; i + 1 < n_points; ++i)
            mats.push_back(rand_monomial2(rng, m));
        cym::MonodromyTuple t = close_up(std::move(mats));
        if (cym::is_irreducible(t)) return t;
    }
}

inline cym::JordanData jd_of_diag(const std::vector<cym::Cyclotomic>& entries) {
    cym::Matrix m(entries.size(), entries.size());
    for (unsigned long i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return cym::jordan_data(m);
}

inline cym::JordanData jd_unipotent2(const cym::Cyclotomic& eig) {
    return cym::jordan_data(mat2(eig, 1, 0, eig));
}

}  // namespace fixtures
