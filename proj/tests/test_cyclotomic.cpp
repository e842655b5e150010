#include <random>

#include "cym/cyclotomic.hpp"
#include "cym/expr.hpp"
#include "doctest.h"

using namespace cym;

namespace {

Cyclotomic random_element(std::mt19937& rng) {
    static const unsigned long conductors[] = {1, 3, 4, 5, 7, 8, 9, 12};
    std::uniform_int_distribution<int> pick(0, 7);
    std::uniform_int_distribution<int> coeff(-3, 3);
    const unsigned long m = conductors[pick(rng)];
    std::vector<Rational> raw(m, Rational(0));
    for (auto& v : raw)
        if (coeff(rng) > 0) v = coeff(rng);
    return Cyclotomic::from_raw(m, std::move(raw));
}

}  // namespace

TEST_CASE("constructors and conductor normalization") {
    CHECK(Cyclotomic(0).is_zero());
    CHECK(Cyclotomic(5).conductor() == 1);
    CHECK(Cyclotomic::zeta(1) == Cyclotomic(1));
    CHECK(Cyclotomic::zeta(2) == Cyclotomic(-1));
    CHECK(Cyclotomic::zeta(6).conductor() == 3);
    CHECK(Cyclotomic::zeta(10).conductor() == 5);
    CHECK(Cyclotomic::zeta_power(10, 2) == Cyclotomic::zeta(5));
    CHECK(Cyclotomic::zeta(10).pow(5) == Cyclotomic(-1));
    CHECK(Cyclotomic::zeta(10).pow(10) == Cyclotomic(1));
    // powers fold back to smaller fields
    CHECK(Cyclotomic::zeta(12).pow(3).conductor() == 4);
    CHECK(Cyclotomic::zeta(12).pow(3) == Cyclotomic::zeta(4));
    CHECK(Cyclotomic::zeta(8).pow(2) == Cyclotomic::zeta(4));
    CHECK((Cyclotomic::zeta(7) * Cyclotomic::zeta_power(7, 6)) == Cyclotomic(1));
    CHECK((Cyclotomic(1) + Cyclotomic::zeta(3) + Cyclotomic::zeta_power(3, 2)).is_zero());
}

TEST_CASE("mixed-conductor arithmetic promotes to the compositum") {
    const Cyclotomic x = Cyclotomic::zeta(3) * Cyclotomic::zeta(4);
    CHECK(x.conductor() == 12);
    CHECK(x == Cyclotomic::zeta_power(12, 7));
    const Cyclotomic y = Cyclotomic::zeta(3) + Cyclotomic::zeta(5);
    CHECK(y.conductor() == 15);
    CHECK(y - Cyclotomic::zeta(5) == Cyclotomic::zeta(3));
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(20240817u);
    for (int iter = 0; iter < 400; ++iter) {
        const Cyclotomic a = random_element(rng);
        const Cyclotomic b = random_element(rng);
        const Cyclotomic c = random_element(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Cyclotomic(0));
        CHECK(a + Cyclotomic(0) == a);
        CHECK(a * Cyclotomic(1) == a);
        if (!b.is_zero()) {
            CHECK(b * b.inverse() == Cyclotomic(1));
            CHECK((a * b) / b == a);
        }
    }
}

TEST_CASE("galois action") {
    const Cyclotomic z5 = Cyclotomic::zeta(5);
    CHECK(z5.galois(2) == z5.pow(2));
    CHECK(z5.conj() == z5.pow(4));
    CHECK(sqrt5().is_real());
    CHECK_FALSE(z5.is_real());

    // the golden-trace element has exactly two conjugates
    const Cyclotomic t = z5 + z5.pow(4);
    auto conj = galois_conjugates(t);
    REQUIRE(conj.size() == 2);
    const Cyclotomic other = z5.pow(2) + z5.pow(3);
    CHECK(((conj[0] == t && conj[1] == other) || (conj[0] == other && conj[1] == t)));
    CHECK(t + other == Cyclotomic(-1));
    CHECK(t * other == Cyclotomic(-1));

    // automorphism property at conductor 12
    std::mt19937 rng(7u);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<Rational> ra(12), rb(12);
        for (auto& v : ra) v = coeff(rng);
        for (auto& v : rb) v = coeff(rng);
        const Cyclotomic a = Cyclotomic::from_raw(12, ra);
        const Cyclotomic b = Cyclotomic::from_raw(12, rb);
        for (unsigned long k : {5ul, 7ul, 11ul}) {
            CHECK((a + b).galois(k) == a.galois(k) + b.galois(k));
            CHECK((a * b).galois(k) == a.galois(k) * b.galois(k));
        }
    }
}

TEST_CASE("minimal conductor storage") {
    CHECK(sqrt5().conductor() == 5);
    CHECK(sqrt2().conductor() == 8);
    CHECK(sqrt3().conductor() == 12);
    CHECK(sqrt_minus7().conductor() == 7);
    CHECK((Cyclotomic::zeta(4) + (-Cyclotomic::zeta(4))).conductor() == 1);
    CHECK((Cyclotomic::zeta(8) * Cyclotomic::zeta(8)).conductor() == 4);
    // a sum that collapses into a quadratic subfield
    const Cyclotomic s = Cyclotomic::zeta(8) - Cyclotomic::zeta_power(8, 3);
    CHECK(s == sqrt2());
}

TEST_CASE("quadratic irrationalities square correctly") {
    CHECK(sqrt5() * sqrt5() == Cyclotomic(5));
    CHECK(sqrt2() * sqrt2() == Cyclotomic(2));
    CHECK(sqrt3() * sqrt3() == Cyclotomic(3));
    CHECK(sqrt_minus7() * sqrt_minus7() == Cyclotomic(-7));
    const Cyclotomic phi = golden_ratio();
    CHECK(phi * phi == phi + Cyclotomic(1));
    CHECK(phi.conductor() == 5);
}

TEST_CASE("root of unity recognition") {
    auto r = is_root_of_unity(Cyclotomic::zeta_power(12, 5));
    REQUIRE(r.has_value());
    CHECK(r->order == 12);
    CHECK(r->exponent == 5);

    r = is_root_of_unity(Cyclotomic(1));
    REQUIRE(r.has_value());
    CHECK(r->order == 1);

    r = is_root_of_unity(Cyclotomic(-1));
    REQUIRE(r.has_value());
    CHECK(r->order == 2);
    CHECK(r->exponent == 1);

    // 1 + zeta_3 is a primitive 6th root of unity
    r = is_root_of_unity(Cyclotomic(1) + Cyclotomic::zeta(3));
    REQUIRE(r.has_value());
    CHECK(r->order == 6);
    CHECK(r->exponent == 1);

    CHECK_FALSE(is_root_of_unity(Cyclotomic(2)).has_value());
    CHECK_FALSE(is_root_of_unity(Cyclotomic(0)).has_value());
    CHECK_FALSE(is_root_of_unity(Cyclotomic(1) + Cyclotomic::zeta(5)).has_value());
    CHECK_FALSE(is_root_of_unity(sqrt5()).has_value());

    // arithmetic on the normal form
    const RootOfUnity a(12, 5), b(8, 3);
    const RootOfUnity p = a * b;
    CHECK(p.value() == a.value() * b.value());
    CHECK((a * a.inverse()).is_one());
    CHECK(a.pow(-1) == a.inverse());
    CHECK(a.pow(5).value() == a.value().pow(5));
}

TEST_CASE("expression parsing") {
    CHECK(parse_cyclotomic("0", 5).is_zero());
    CHECK(parse_cyclotomic("z", 5) == Cyclotomic::zeta(5));
    CHECK(parse_cyclotomic("z^4", 5) == Cyclotomic::zeta_power(5, 4));
    CHECK(parse_cyclotomic("-z", 5) == -Cyclotomic::zeta(5));
    CHECK(parse_cyclotomic("-z^2", 4) == -Cyclotomic(-1));
    CHECK(parse_cyclotomic("2*z^3-z+1/2", 7) ==
          Cyclotomic(2) * Cyclotomic::zeta_power(7, 3) - Cyclotomic::zeta(7) +
              Cyclotomic(rational_of(1, 2)));
    CHECK(parse_cyclotomic("(1+z)^2", 3) ==
          (Cyclotomic(1) + Cyclotomic::zeta(3)).pow(2));
    CHECK(parse_cyclotomic(" 1 + 2 * z ", 5) ==
          Cyclotomic(1) + Cyclotomic(2) * Cyclotomic::zeta(5));
    CHECK(parse_cyclotomic("3/4", 1) == Cyclotomic(rational_of(3, 4)));

    CHECK_THROWS_AS(parse_cyclotomic("z+", 5), std::invalid_argument);
    CHECK_THROWS_AS(parse_cyclotomic("q", 5), std::invalid_argument);
    CHECK_THROWS_AS(parse_cyclotomic("1/0", 5), std::invalid_argument);
    CHECK_THROWS_AS(parse_cyclotomic("(1+z", 5), std::invalid_argument);
    CHECK_THROWS_AS(parse_cyclotomic("1 2", 5), std::invalid_argument);
}

TEST_CASE("formatting round trip") {
    CHECK(canonical_string(Cyclotomic(0)) == "0");
    CHECK(canonical_string(Cyclotomic(-3)) == "-3");
    CHECK(canonical_string(Cyclotomic::zeta(5)) == "z");
    CHECK(canonical_string(-Cyclotomic::zeta(5)) == "-z");
    // 1 + 2 z + 2 z^4 rewritten in the power basis 1, z, z^2, z^3
    CHECK(canonical_string(sqrt5()) == "-2*z^3-2*z^2-1");

    std::mt19937 rng(99u);
    for (int iter = 0; iter < 200; ++iter) {
        const Cyclotomic x = random_element(rng);
        CHECK(parse_cyclotomic(canonical_string(x), x.conductor()) == x);
        // formatting at an ambient multiple also round-trips
        const unsigned long m = x.conductor() * 3;
        CHECK(parse_cyclotomic(format_at(x, m), m) == x);
    }
}

TEST_CASE("coefficient promotion round trip") {
    const Cyclotomic x = parse_cyclotomic("1+2*z", 5);
    const auto at15 = x.coefficients_at(15);
    std::vector<Rational> raw(at15.begin(), at15.end());
    CHECK(Cyclotomic::from_raw(15, raw) == x);
    CHECK_THROWS_AS(x.coefficients_at(6), std::invalid_argument);
}
