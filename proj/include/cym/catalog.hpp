#pragma once

// Built-in example tuples, each bundled with the properties a consumer can
// check after the fact: closure order, pseudoreflection placement, the
// contraction parameter the default pipeline picks, and the output rank.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "cym/document.hpp"
#include "cym/tuple.hpp"

namespace cym {

struct CatalogExpectations {
    unsigned long closure_order = 0;  // 0 = closure not asserted finite
    unsigned long pseudoreflections_in_closure = 0;
    std::vector<bool> entry_is_pseudoreflection;  // per tuple slot
    RootOfUnity contraction_nu;                   // parameter the pipeline picks
    unsigned long contracted_rank = 0;            // rank after the pipeline
    std::string group_label;                      // recognition label, if tabled
};

struct CatalogEntry {
    std::string name;
    TupleDocument document;
    CatalogExpectations expect;
};

namespace catalog_detail {

inline Matrix from_ints(const std::array<std::array<int, 4>, 4>& g) {
    Matrix m(4, 4);
    for (unsigned long i = 0; i < 4; ++i)
        for (unsigned long j = 0; j < 4; ++j) m(i, j) = Cyclotomic(g[i][j]);
    return m;
}

inline MonodromyTuple close_up(std::vector<Matrix> mats) {
    Matrix prod = Matrix::identity(mats.front().rows());
    for (const auto& m : mats) prod = prod * m;
    mats.push_back(inverse(prod));
    MonodromyTuple t;
    t.rank = mats.front().rows();
    t.mats = std::move(mats);
    return t;
}

// the rotation a = r1 r2 has order 5, b = r2 r3 order 3, ab order 2; any pair
// of permutations with those orders generating evenly presents the same group,
// so mapping generator words carries permutations to rotation matrices
struct IcosahedralModel {
    Matrix a, b;
    std::array<std::uint8_t, 5> pa, pb;

    static std::array<std::uint8_t, 5> compose(const std::array<std::uint8_t, 5>& p,
                                               const std::array<std::uint8_t, 5>& q) {
        std::array<std::uint8_t, 5> r{};
        for (unsigned i = 0; i < 5; ++i) r[i] = p[q[i]];
        return r;
    }

    explicit IcosahedralModel(bool conjugate_field) {
        const long e = conjugate_field ? 2 : 1;
        const Cyclotomic z = Cyclotomic::zeta_power(5, e);
        // 2cos(pi/5) for the primary choice, its field conjugate otherwise
        const Cyclotomic two_c = Cyclotomic(1) + z + z.inverse();

        Matrix r1 = Matrix::identity(3);
        r1(0, 0) = Cyclotomic(-1);
        r1(0, 1) = two_c;
        Matrix r2 = Matrix::identity(3);
        r2(1, 0) = two_c;
        r2(1, 1) = Cyclotomic(-1);
        r2(1, 2) = Cyclotomic(1);
        Matrix r3 = Matrix::identity(3);
        r3(2, 1) = Cyclotomic(1);
        r3(2, 2) = Cyclotomic(-1);
        a = r1 * r2;
        b = r2 * r3;

        pa = {1, 2, 3, 4, 0};  // five-cycle
        for (unsigned c0 = 0; c0 < 5; ++c0)
            for (unsigned c1 = 0; c1 < 5; ++c1)
                for (unsigned c2 = 0; c2 < 5; ++c2) {
                    if (c0 == c1 || c1 == c2 || c0 == c2) continue;
                    std::array<std::uint8_t, 5> cand = {0, 1, 2, 3, 4};
                    cand[c0] = static_cast<std::uint8_t>(c1);
                    cand[c1] = static_cast<std::uint8_t>(c2);
                    cand[c2] = static_cast<std::uint8_t>(c0);
                    const auto prod = compose(pa, cand);
                    const auto sq = compose(prod, prod);
                    bool ident = true;
                    for (unsigned i = 0; i < 5; ++i)
                        if (sq[i] != i) ident = false;
                    if (ident) {
                        pb = cand;
                        return;
                    }
                }
        throw std::logic_error("icosahedral model: no order-3 partner found");
    }

    // word lookup over the 60 even permutations, then evaluation in matrices
    Matrix rotation_for(const std::array<std::uint8_t, 5>& target) const {
        std::vector<std::array<std::uint8_t, 5>> seen;
        std::vector<std::pair<int, int>> origin;  // (parent index, generator)
        seen.push_back({0, 1, 2, 3, 4});
        origin.emplace_back(-1, -1);
        for (std::size_t head = 0; head < seen.size(); ++head) {
            if (seen[head] == target) {
                std::vector<int> word;
                for (std::size_t at = head; origin[at].first >= 0;
                     at = static_cast<std::size_t>(origin[at].first))
                    word.push_back(origin[at].second);
                Matrix m = Matrix::identity(3);
                for (auto it = word.rbegin(); it != word.rend(); ++it)
                    m = m * (*it == 0 ? a : b);
                return m;
            }
            for (int g = 0; g < 2; ++g) {
                const auto next = compose(seen[head], g == 0 ? pa : pb);
                bool known = false;
                for (const auto& s : seen)
                    if (s == next) {
                        known = true;
                        break;
                    }
                if (!known) {
                    seen.push_back(next);
                    origin.emplace_back(static_cast<int>(head), g);
                }
            }
        }
        throw std::invalid_argument("icosahedral model: permutation is not even");
    }
};

}  // namespace catalog_detail

// Six 4x4 signed permutation reflections with product one; the last is the
// negative of a reflection.
inline MonodromyTuple d4_tuple() {
    using catalog_detail::from_ints;
    MonodromyTuple t;
    t.rank = 4;
    t.mats = {
        from_ints({{{0, -1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}}),
        from_ints({{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}}),
        from_ints({{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}, {0, 0, -1, 0}}}),
        from_ints({{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}}),
        from_ints({{{0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}}}),
        from_ints({{{0, 0, 1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}}}),
    };
    return t;
}

// Four monomial rank-3 reflections from two commuting swap pairs; the closing
// fifth slot is a scalar times a pseudoreflection.
inline MonodromyTuple gmp3_tuple() {
    const Cyclotomic a = Cyclotomic::zeta_power(8, 3);
    const Cyclotomic b = Cyclotomic::zeta(8);
    const Cyclotomic c = Cyclotomic::zeta(8);
    const Cyclotomic d = Cyclotomic::zeta_power(8, 3);
    auto swap01 = [](const Cyclotomic& x) {
        Matrix m(3, 3);
        m(0, 1) = x;
        m(1, 0) = x.inverse();
        m(2, 2) = Cyclotomic(1);
        return m;
    };
    auto swap12 = [](const Cyclotomic& x) {
        Matrix m(3, 3);
        m(0, 0) = Cyclotomic(1);
        m(1, 2) = x;
        m(2, 1) = x.inverse();
        return m;
    };
    return catalog_detail::close_up({swap01(a), swap01(b), swap12(c), swap12(d)});
}

// Five 3x3 matrices over the golden field: four reflections (each the negative
// of an order-2 rotation of the icosahedron) and the closing rotation.  The
// conjugate_lift flag selects the other embedding of the trace field.
inline MonodromyTuple h3_tuple(bool conjugate_lift = false) {
    const catalog_detail::IcosahedralModel model(conjugate_lift);
    using P = std::array<std::uint8_t, 5>;
    const std::vector<P> sigma = {
        {1, 0, 3, 2, 4},  // (12)(34)
        {4, 1, 3, 2, 0},  // (34)(51)
        {4, 2, 1, 3, 0},  // (51)(23)
        {0, 2, 1, 4, 3},  // (23)(45)
        {1, 0, 2, 4, 3},  // (45)(12)
    };
    MonodromyTuple t;
    t.rank = 3;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        Matrix m = model.rotation_for(sigma[i]);
        if (i + 1 < sigma.size()) m = -m;
        t.mats.push_back(std::move(m));
    }
    return t;
}

// Four anti-diagonal rank-2 matrices (0, a; -1/a, 0) whose parameters make the
// product the identity; the pipeline twists them into reflections.
inline MonodromyTuple dihedral4_tuple() {
    auto anti = [](const Cyclotomic& x) {
        Matrix m(2, 2);
        m(0, 1) = x;
        m(1, 0) = -x.inverse();
        return m;
    };
    const Cyclotomic one(1);
    const Cyclotomic z8 = Cyclotomic::zeta(8);
    MonodromyTuple t;
    t.rank = 2;
    t.mats = {anti(one), anti(z8), anti(z8), anti(one)};
    return t;
}

inline std::vector<std::string> catalog_names() {
    return {"d4", "dihedral4", "gmp3", "h3"};
}

inline CatalogEntry catalog_entry(const std::string& name,
                                  bool conjugate_lift = false) {
    CatalogEntry e;
    e.name = name;
    if (name == "d4") {
        e.document = make_document(d4_tuple(), name,
                                   "six reflections contracting to rank two");
        e.expect.closure_order = 192;
        e.expect.pseudoreflections_in_closure = 12;
        e.expect.entry_is_pseudoreflection = {true, true, true, true, true, false};
        e.expect.contraction_nu = RootOfUnity::minus_one();
        e.expect.contracted_rank = 2;
        e.expect.group_label = "G(2,2,4)";
    } else if (name == "gmp3") {
        e.document = make_document(gmp3_tuple(), name,
                                   "monomial reflections on two swap pairs");
        e.expect.closure_order = 96;
        e.expect.pseudoreflections_in_closure = 12;
        e.expect.entry_is_pseudoreflection = {true, true, true, true, false};
        e.expect.contraction_nu = RootOfUnity(4, 3);
        e.expect.contracted_rank = 2;
        e.expect.group_label = "G(4,4,3)";
    } else if (name == "h3") {
        e.document = make_document(h3_tuple(conjugate_lift), name,
                                   "icosahedral reflections on five points");
        e.expect.closure_order = 120;
        e.expect.pseudoreflections_in_closure = 15;
        e.expect.entry_is_pseudoreflection = {true, true, true, true, false};
        e.expect.contraction_nu = RootOfUnity::minus_one();
        e.expect.contracted_rank = 2;
        e.expect.group_label = "H3";
    } else if (name == "dihedral4") {
        e.document = make_document(dihedral4_tuple(), name,
                                   "anti-diagonal four-point source");
        e.expect.closure_order = 16;
        e.expect.pseudoreflections_in_closure = 0;
        e.expect.entry_is_pseudoreflection = {false, false, false, false};
        e.expect.contraction_nu = RootOfUnity::minus_one();
        e.expect.contracted_rank = 2;
        e.expect.group_label = "";
    } else {
        throw std::invalid_argument("catalog_entry: unknown name '" + name + "'");
    }
    return e;
}

}  // namespace cym
