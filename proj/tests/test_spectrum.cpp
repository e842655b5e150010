#include <random>

#include "cym/spectrum.hpp"
#include "doctest.h"

using namespace cym;

namespace {

Matrix diag2(const Cyclotomic& a, const Cyclotomic& b) {
    Matrix m(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

Matrix random_invertible(std::mt19937& rng, unsigned long n) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (;;) {
        Matrix m(n, n);
        for (unsigned long i = 0; i < n; ++i)
            for (unsigned long j = 0; j < n; ++j) m(i, j) = Cyclotomic(coeff(rng));
        if (!det(m).is_zero()) return m;
    }
}

}  // namespace

TEST_CASE("root of unity spectra") {
    auto s = root_of_unity_spectrum(Matrix::identity(3));
    CHECK(s.quasi_unipotent);
    CHECK(s.eigenvalues == std::vector<RootOfUnity>{RootOfUnity(), RootOfUnity(),
                                                    RootOfUnity()});

    s = root_of_unity_spectrum(diag2(Cyclotomic::zeta(3), Cyclotomic::zeta_power(3, 2)));
    CHECK(s.quasi_unipotent);
    CHECK(s.eigenvalues == std::vector<RootOfUnity>{RootOfUnity(3, 1), RootOfUnity(3, 2)});

    s = root_of_unity_spectrum(diag2(Cyclotomic(2), Cyclotomic(rational_of(1, 2))));
    CHECK_FALSE(s.quasi_unipotent);
    CHECK(s.leftover.degree() == 2);
    CHECK(s.eigenvalues.empty());

    Matrix rot(2, 2);
    rot(0, 1) = Cyclotomic(1);
    rot(1, 0) = Cyclotomic(-1);
    s = root_of_unity_spectrum(rot);
    CHECK(s.quasi_unipotent);
    CHECK(s.eigenvalues == std::vector<RootOfUnity>{RootOfUnity(4, 1), RootOfUnity(4, 3)});

    CHECK_THROWS_AS(root_of_unity_spectrum(diag2(Cyclotomic(1), Cyclotomic(0))),
                    std::invalid_argument);
}

TEST_CASE("spectrum finds roots outside the entry field") {
    // companion matrix of x^3 - zeta_3: roots are primitive 9th roots
    Matrix c(3, 3);
    c(0, 2) = Cyclotomic::zeta(3);
    c(1, 0) = Cyclotomic(1);
    c(2, 1) = Cyclotomic(1);
    const auto p = char_poly(c);
    CHECK(p == Poly<Cyclotomic>(std::vector<Cyclotomic>{-Cyclotomic::zeta(3),
                                                        Cyclotomic(0), Cyclotomic(0),
                                                        Cyclotomic(1)}));
    auto s = root_of_unity_spectrum(c);
    CHECK(s.quasi_unipotent);
    CHECK(s.eigenvalues == std::vector<RootOfUnity>{RootOfUnity(9, 1), RootOfUnity(9, 4),
                                                    RootOfUnity(9, 7)});

    // a small order bound keeps the factor unexplained
    s = root_of_unity_spectrum(c, 5);
    CHECK_FALSE(s.quasi_unipotent);
    CHECK(s.leftover.degree() == 3);
}

TEST_CASE("jordan data") {
    Matrix u(2, 2);
    u(0, 0) = Cyclotomic(1);
    u(0, 1) = Cyclotomic(1);
    u(1, 1) = Cyclotomic(1);
    auto j = jordan_data(u);
    REQUIRE(j.blocks.size() == 1);
    CHECK(j.blocks[0] == JordanBlock{RootOfUnity(), 2});
    CHECK(j.ambient_rank == 2);

    Matrix v = -u;
    j = jordan_data(v);
    REQUIRE(j.blocks.size() == 1);
    CHECK(j.blocks[0] == JordanBlock{RootOfUnity(2, 1), 2});

    j = jordan_data(diag2(Cyclotomic::zeta(3), Cyclotomic::zeta_power(3, 2)));
    REQUIRE(j.blocks.size() == 2);
    CHECK(j.blocks[0] == JordanBlock{RootOfUnity(3, 1), 1});
    CHECK(j.blocks[1] == JordanBlock{RootOfUnity(3, 2), 1});

    // J(1,2) + J(1,1) mixed profile
    Matrix w(3, 3);
    w(0, 0) = Cyclotomic(1);
    w(0, 1) = Cyclotomic(1);
    w(1, 1) = Cyclotomic(1);
    w(2, 2) = Cyclotomic(1);
    j = jordan_data(w);
    REQUIRE(j.blocks.size() == 2);
    CHECK(j.blocks[0] == JordanBlock{RootOfUnity(), 1});
    CHECK(j.blocks[1] == JordanBlock{RootOfUnity(), 2});

    CHECK_THROWS_AS(jordan_data(diag2(Cyclotomic(2), Cyclotomic(rational_of(1, 2)))),
                    NotQuasiUnipotentError);
}

TEST_CASE("jordan data is a conjugation invariant") {
    std::mt19937 rng(31337u);
    Matrix a(3, 3);
    a(0, 0) = Cyclotomic(1);
    a(0, 1) = Cyclotomic(1);
    a(1, 1) = Cyclotomic(1);
    a(2, 2) = Cyclotomic::zeta(4);
    const auto base = jordan_data(a);
    for (int iter = 0; iter < 10; ++iter) {
        const Matrix p = random_invertible(rng, 3);
        CHECK(jordan_data(p * a * inverse(p)) == base);
    }
}

TEST_CASE("pseudoreflection test") {
    Matrix r(3, 3);
    r(0, 0) = Cyclotomic(-1);
    r(1, 1) = Cyclotomic(1);
    r(2, 2) = Cyclotomic(1);
    CHECK(is_pseudoreflection(r));
    CHECK_FALSE(is_pseudoreflection(Matrix::identity(3)));

    Matrix t(2, 2);
    t(0, 0) = Cyclotomic(1);
    t(0, 1) = Cyclotomic(1);
    t(1, 1) = Cyclotomic(1);
    CHECK(is_pseudoreflection(t));  // transvection

    std::mt19937 rng(5u);
    for (int iter = 0; iter < 10; ++iter) {
        const Matrix p = random_invertible(rng, 3);
        CHECK(is_pseudoreflection(p * r * inverse(p)));
    }
}

TEST_CASE("scalar pseudoreflection split") {
    Matrix r(3, 3);
    r(0, 0) = Cyclotomic(-1);
    r(1, 1) = Cyclotomic(1);
    r(2, 2) = Cyclotomic(1);
    auto sp = scalar_pseudoreflection_split(r);
    REQUIRE(sp.has_value());
    CHECK(sp->first == RootOfUnity());
    CHECK(sp->second == r);

    // zeta_3 times the same reflection
    const Matrix a = Cyclotomic::zeta(3) * r;
    sp = scalar_pseudoreflection_split(a);
    REQUIRE(sp.has_value());
    CHECK(sp->first == RootOfUnity(3, 1));
    CHECK(sp->second == r);

    CHECK_FALSE(scalar_pseudoreflection_split(Matrix::identity(3)).has_value());

    // scalar times a transvection: candidate comes from the partial spectrum
    Matrix t(2, 2);
    t(0, 0) = Cyclotomic::zeta(4);
    t(0, 1) = Cyclotomic::zeta(4);
    t(1, 1) = Cyclotomic::zeta(4);
    sp = scalar_pseudoreflection_split(t);
    REQUIRE(sp.has_value());
    CHECK(sp->first == RootOfUnity(4, 1));
    CHECK(is_pseudoreflection(sp->second));

    // pseudoreflection with a non-root-of-unity eigenvalue still splits at mu=1
    Matrix d(3, 3);
    d(0, 0) = Cyclotomic(2);
    d(1, 1) = Cyclotomic(1);
    d(2, 2) = Cyclotomic(1);
    sp = scalar_pseudoreflection_split(d);
    REQUIRE(sp.has_value());
    CHECK(sp->first == RootOfUnity());

    // scalar matrices never split
    CHECK_FALSE(scalar_pseudoreflection_split(
                    Matrix::scalar(3, Cyclotomic::zeta(5)))
                    .has_value());
}
