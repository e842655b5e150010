#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cym/field.hpp"
#include "cym/groups.hpp"
#include "cym/linalg.hpp"

namespace cym {

enum class Source { Computed, Literature };

// One reference row: a named finite reflection group together with the facts
// recognition matches against.  Rows without a generator function are
// facts-only.  `validated` rows are cheap enough to re-enumerate in tests.
struct ShephardToddRecord {
    std::string label;
    bool exceptional = false;  // false: Weyl / real Coxeter family member
    unsigned long rank = 0;
    unsigned long order = 0;
    std::map<unsigned long, unsigned long> census;  // reflection order -> count
    std::vector<Cyclotomic> field_gens;             // trace field of the matrix model
    bool totally_real = false;
    Source order_source = Source::Literature;
    Source census_source = Source::Literature;
    Source field_source = Source::Literature;
    std::function<std::vector<Matrix>()> generators;  // empty if facts-only
    bool validated = false;
};

// ---------------------------------------------------------------------------
// imprimitive family

// diag(z_m^p, 1, ...), the twisted swap e1 -> z_m e2, e2 -> z_m^{-1} e1, and
// the plain transpositions
inline std::vector<Matrix> gmpn_generators(unsigned long m, unsigned long p,
                                           unsigned long n) {
    if (m == 0 || p == 0 || m % p != 0 || n == 0)
        throw std::invalid_argument("gmpn_generators: need p | m, n >= 1");
    std::vector<Matrix> out;
    if (p < m) {
        Matrix d = Matrix::identity(n);
        d(0, 0) = Cyclotomic::zeta_power(m, static_cast<long>(p));
        out.push_back(d);
    }
    if (p > 1 && n >= 2) {
        Matrix t(n, n);
        for (unsigned long i = 2; i < n; ++i) t(i, i) = Cyclotomic(1);
        t(1, 0) = Cyclotomic::zeta(m);
        t(0, 1) = Cyclotomic::zeta_power(m, -1);
        out.push_back(t);
    }
    for (unsigned long i = 0; i + 1 < n; ++i) {
        Matrix s = Matrix::identity(n);
        s(i, i) = Cyclotomic(0);
        s(i + 1, i + 1) = Cyclotomic(0);
        s(i, i + 1) = Cyclotomic(1);
        s(i + 1, i) = Cyclotomic(1);
        out.push_back(s);
    }
    if (out.empty()) out.push_back(Matrix::identity(n));
    return out;
}

// ---------------------------------------------------------------------------
// real Coxeter groups from Gram matrices

inline Cyclotomic minus_two_cos_pi_over(unsigned long m) {
    // -(z + z^-1) at a primitive 2m-th root is -2cos(pi/m)
    return Cyclotomic(0) - Cyclotomic::zeta(2 * m) - Cyclotomic::zeta_power(2 * m, -1);
}

// Gram matrix with diagonal 2 from a Coxeter-diagram edge list
inline Matrix coxeter_gram(unsigned long n,
                           const std::vector<std::tuple<unsigned long, unsigned long,
                                                        unsigned long>>& edges) {
    Matrix g(n, n);
    for (unsigned long i = 0; i < n; ++i) g(i, i) = Cyclotomic(2);
    for (const auto& [a, b, m] : edges) {
        g(a, b) = minus_two_cos_pi_over(m);
        g(b, a) = g(a, b);
    }
    return g;
}

inline Matrix coxeter_gram(const std::string& type, unsigned long n) {
    using E = std::tuple<unsigned long, unsigned long, unsigned long>;
    std::vector<E> edges;
    auto chain = [&](unsigned long upto) {
        for (unsigned long i = 0; i + 1 < upto; ++i) edges.push_back({i, i + 1, 3});
    };
    if (type == "A") {
        chain(n);
    } else if (type == "B") {
        if (n < 2) throw std::invalid_argument("coxeter_gram: B needs rank >= 2");
        chain(n - 1);
        edges.push_back({n - 2, n - 1, 4});
    } else if (type == "D") {
        if (n < 3) throw std::invalid_argument("coxeter_gram: D needs rank >= 3");
        chain(n - 1);
        edges.push_back({n - 3, n - 1, 3});
    } else if (type == "E") {
        if (n < 6 || n > 8) throw std::invalid_argument("coxeter_gram: E rank 6..8");
        // chain 0-2-3-4-...-(n-1) with node 1 hanging off node 3
        edges.push_back({0, 2, 3});
        for (unsigned long i = 2; i + 1 < n; ++i) edges.push_back({i, i + 1, 3});
        edges.push_back({1, 3, 3});
    } else if (type == "F") {
        if (n != 4) throw std::invalid_argument("coxeter_gram: F rank 4");
        edges = {E{0, 1, 3}, E{1, 2, 4}, E{2, 3, 3}};
    } else if (type == "H") {
        if (n < 2 || n > 4) throw std::invalid_argument("coxeter_gram: H rank 2..4");
        edges.push_back({0, 1, 5});
        for (unsigned long i = 1; i + 1 < n; ++i) edges.push_back({i, i + 1, 3});
    } else if (type == "I") {
        // I2(m) packs m into the rank argument
        if (n < 3) throw std::invalid_argument("coxeter_gram: I needs bond >= 3");
        return coxeter_gram(2, {E{0, 1, n}});
    } else {
        throw std::invalid_argument("coxeter_gram: unknown type " + type);
    }
    return coxeter_gram(n, edges);
}

// s_i(x) = x - <x, a_i> a_i in the root basis: identity with row i replaced
inline std::vector<Matrix> coxeter_generators(const Matrix& gram) {
    std::vector<Matrix> out;
    for (unsigned long i = 0; i < gram.rows(); ++i) {
        Matrix s = Matrix::identity(gram.rows());
        for (unsigned long j = 0; j < gram.cols(); ++j)
            s(i, j) = s(i, j) - gram(i, j);
        out.push_back(s);
    }
    return out;
}

inline std::vector<Matrix> coxeter_generators(const std::string& type, unsigned long n) {
    return coxeter_generators(coxeter_gram(type, n));
}

// ---------------------------------------------------------------------------
// exceptional constructions

// order-3 reflection fixing the hyperplane orthogonal to v (hermitian inner
// product, <v,v> must divide the numerators exactly for an integral result)
inline Matrix eisenstein_reflection(const std::vector<Cyclotomic>& v) {
    const unsigned long n = v.size();
    Cyclotomic norm;
    for (const auto& x : v) norm = norm + x * x.conj();
    const Cyclotomic scale = (Cyclotomic::zeta(3) - Cyclotomic(1)) / norm;
    Matrix r = Matrix::identity(n);
    for (unsigned long i = 0; i < n; ++i)
        for (unsigned long j = 0; j < n; ++j)
            r(i, j) = r(i, j) + scale * v[i] * v[j].conj();
    return r;
}

// 3x3 unitary reflection group of order 648 (Hessian)
inline std::vector<Matrix> hessian_l3_generators() {
    const Cyclotomic w = Cyclotomic::zeta(3);
    Matrix d = Matrix::identity(3);
    d(0, 0) = w;
    return {d, eisenstein_reflection({Cyclotomic(1), Cyclotomic(1), Cyclotomic(1)}),
            eisenstein_reflection({Cyclotomic(1), w, w * w})};
}

// order 1296: the Hessian group extended by a coordinate swap
inline std::vector<Matrix> hessian_m3_generators() {
    std::vector<Matrix> out = hessian_l3_generators();
    Matrix s = Matrix::identity(3);
    s(0, 0) = Cyclotomic(0);
    s(1, 1) = Cyclotomic(0);
    s(0, 1) = Cyclotomic(1);
    s(1, 0) = Cyclotomic(1);
    out.push_back(s);
    return out;
}

// Klein's simple group times the center: order 336 in rank 3
inline std::vector<Matrix> klein_j34_generators() {
    Matrix t(3, 3);
    t(0, 0) = Cyclotomic::zeta(7);
    t(1, 1) = Cyclotomic::zeta_power(7, 2);
    t(2, 2) = Cyclotomic::zeta_power(7, 4);
    Matrix s(3, 3);
    const Cyclotomic root = sqrt_minus7();
    const long exps[3][3] = {{4, 2, 1}, {2, 1, 4}, {1, 4, 2}};
    for (unsigned long j = 0; j < 3; ++j)
        for (unsigned long k = 0; k < 3; ++k) {
            const long e = exps[j][k];
            s(j, k) = (Cyclotomic::zeta_power(7, e) - Cyclotomic::zeta_power(7, -e)) / root;
        }
    return {t, s};
}

// rank-4 order-3 reflection group of order 155520
inline std::vector<Matrix> l4_generators() {
    const Cyclotomic w = Cyclotomic::zeta(3);
    const Cyclotomic one(1), zero;
    Matrix d0 = Matrix::identity(4);
    d0(0, 0) = w;
    Matrix d1 = Matrix::identity(4);
    d1(1, 1) = w;
    return {d0, eisenstein_reflection({one, one, one, zero}), d1,
            eisenstein_reflection({zero, one, Cyclotomic(-1), one})};
}

// rank-5 order-2 reflection group of order 51840.  The oscillator
// representation of the symplectic group over F_3 acts on functions
// F_3^2 -> C; parity splits that 9-dimensional space into a 4-dimensional
// odd part and a 5-dimensional even part, and the even part (with -I
// adjoined) is generated by pseudoreflections.
namespace detail {

inline Matrix oscillator_quadratic(int b11, int b12, int b22) {
    // f(x) |-> chi((x^T B x)/2) f(x), working mod 3 where 1/2 = 2
    Matrix m(9, 9);
    for (int x1 = 0; x1 < 3; ++x1)
        for (int x2 = 0; x2 < 3; ++x2) {
            const int q = (2 * (b11 * x1 * x1 + 2 * b12 * x1 * x2 + b22 * x2 * x2)) % 3;
            m(3 * x1 + x2, 3 * x1 + x2) = Cyclotomic::zeta_power(3, q);
        }
    return m;
}

inline Matrix oscillator_linear(int a, int b, int c, int d) {
    // f |-> legendre(det A) f(A^{-1} x); columns permute along x |-> A x
    int det = ((a * d - b * c) % 3 + 3) % 3;
    const int sign = det == 1 ? 1 : -1;
    Matrix m(9, 9);
    for (int y1 = 0; y1 < 3; ++y1)
        for (int y2 = 0; y2 < 3; ++y2) {
            const int x1 = ((a * y1 + b * y2) % 3 + 3) % 3;
            const int x2 = ((c * y1 + d * y2) % 3 + 3) % 3;
            m(3 * x1 + x2, 3 * y1 + y2) = Cyclotomic(sign);
        }
    return m;
}

inline Matrix oscillator_fourier() {
    // f |-> gamma sum_x chi(x . y) f(x), gamma the inverse square of the
    // quadratic Gauss sum so the operator has order four
    Matrix m(9, 9);
    const Cyclotomic g = Cyclotomic(-1) / Cyclotomic(3);
    for (int y1 = 0; y1 < 3; ++y1)
        for (int y2 = 0; y2 < 3; ++y2)
            for (int x1 = 0; x1 < 3; ++x1)
                for (int x2 = 0; x2 < 3; ++x2)
                    m(3 * y1 + y2, 3 * x1 + x2) = g * Cyclotomic::zeta_power(3, (x1 * y1 + x2 * y2) % 3);
    return m;
}

}  // namespace detail

inline std::vector<Matrix> k5_generators() {
    const std::vector<Matrix> big = {
        detail::oscillator_quadratic(1, 0, 0), detail::oscillator_quadratic(0, 0, 1),
        detail::oscillator_quadratic(0, 1, 0), detail::oscillator_linear(1, 1, 0, 1),
        detail::oscillator_linear(0, 2, 1, 0), detail::oscillator_fourier()};

    // even-function basis: delta_0 and delta_x + delta_{-x}
    const int pairs[4][2] = {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
    Matrix e(9, 5);
    e(0, 0) = Cyclotomic(1);
    for (int k = 0; k < 4; ++k) {
        const int x1 = pairs[k][0], x2 = pairs[k][1];
        e(3 * x1 + x2, k + 1) = Cyclotomic(1);
        e(3 * ((3 - x1) % 3) + (3 - x2) % 3, k + 1) = Cyclotomic(1);
    }
    Matrix et(5, 9);
    for (int i = 0; i < 9; ++i)
        for (int k = 0; k < 5; ++k) et(k, i) = e(i, k);
    const Matrix left = inverse(et * e) * et;

    std::vector<Matrix> out;
    for (const auto& g : big) {
        const Matrix block = left * (g * e);
        if (!(g * e == e * block))
            throw std::domain_error("k5_generators: even subspace not invariant");
        out.push_back(block);
    }
    out.push_back(Cyclotomic(-1) * Matrix::identity(5));
    return out;
}

// ---------------------------------------------------------------------------
// reference table

inline const std::vector<ShephardToddRecord>& shephard_todd_table() {
    static const std::vector<ShephardToddRecord> table = [] {
        std::vector<ShephardToddRecord> t;
        auto census1 = [](unsigned long o, unsigned long c) {
            return std::map<unsigned long, unsigned long>{{o, c}};
        };
        auto coxeter_row = [&](std::string label, std::string type, unsigned long n,
                               unsigned long order, unsigned long reflections,
                               std::vector<Cyclotomic> field, bool validated) {
            ShephardToddRecord r;
            r.label = std::move(label);
            r.rank = (type == "I") ? 2 : n;
            r.order = order;
            r.census = census1(2, reflections);
            r.field_gens = std::move(field);
            r.totally_real = true;
            r.generators = [type, n] { return coxeter_generators(type, n); };
            r.validated = validated;
            if (validated)
                r.order_source = r.census_source = r.field_source = Source::Computed;
            return r;
        };
        const Cyclotomic w3 = Cyclotomic::zeta(3);
        const Cyclotomic i4 = Cyclotomic::zeta(4);

        t.push_back(coxeter_row("A1", "A", 1, 2, 1, {}, true));
        t.push_back(coxeter_row("A2", "A", 2, 6, 3, {}, true));
        t.push_back(coxeter_row("A3", "A", 3, 24, 6, {}, true));
        t.push_back(coxeter_row("A4", "A", 4, 120, 10, {}, true));
        t.push_back(coxeter_row("B2", "B", 2, 8, 4, {}, true));
        t.push_back(coxeter_row("B3", "B", 3, 48, 9, {}, true));
        t.push_back(coxeter_row("B4", "B", 4, 384, 16, {}, true));
        t.push_back(coxeter_row("D4", "D", 4, 192, 12, {}, true));
        t.push_back(coxeter_row("F4", "F", 4, 1152, 24, {}, true));
        t.push_back(coxeter_row("E6", "E", 6, 51840, 36, {}, true));
        t.push_back(coxeter_row("E7", "E", 7, 2903040, 63, {}, false));
        t.push_back(coxeter_row("E8", "E", 8, 696729600, 120, {}, false));
        {
            ShephardToddRecord r = coxeter_row("H3", "H", 3, 120, 15, {sqrt5()}, true);
            r.exceptional = true;
            t.push_back(std::move(r));
        }
        {
            ShephardToddRecord r = coxeter_row("H4", "H", 4, 14400, 60, {sqrt5()}, true);
            r.exceptional = true;
            t.push_back(std::move(r));
        }
        for (unsigned long m : {5ul, 6ul, 7ul, 8ul, 10ul, 12ul}) {
            // trace field is generated by 2cos(2pi/m), one level below the
            // Gram-entry field when m is even
            ShephardToddRecord r = coxeter_row(
                "I2(" + std::to_string(m) + ")", "I", m, 2 * m, m,
                {Cyclotomic::zeta(m) + Cyclotomic::zeta_power(m, -1)}, true);
            r.exceptional = false;
            t.push_back(std::move(r));
        }

        {
            ShephardToddRecord r;
            r.label = "J3(4)";
            r.exceptional = true;
            r.rank = 3;
            r.order = 336;
            r.census = census1(2, 21);
            r.field_gens = {sqrt_minus7()};
            r.generators = [] { return klein_j34_generators(); };
            r.validated = true;
            r.order_source = r.census_source = r.field_source = Source::Computed;
            t.push_back(std::move(r));
        }
        {
            ShephardToddRecord r;
            r.label = "L3";
            r.exceptional = true;
            r.rank = 3;
            r.order = 648;
            r.census = census1(3, 24);
            r.field_gens = {w3};
            r.generators = [] { return hessian_l3_generators(); };
            r.validated = true;
            r.order_source = r.census_source = r.field_source = Source::Computed;
            t.push_back(std::move(r));
        }
        {
            ShephardToddRecord r;
            r.label = "M3";
            r.exceptional = true;
            r.rank = 3;
            r.order = 1296;
            r.census = {{2, 9}, {3, 24}};
            r.field_gens = {w3};
            r.generators = [] { return hessian_m3_generators(); };
            r.validated = true;
            r.order_source = r.census_source = r.field_source = Source::Computed;
            t.push_back(std::move(r));
        }
        {
            ShephardToddRecord r;
            r.label = "J3(5)";
            r.exceptional = true;
            r.rank = 3;
            r.order = 2160;
            r.census = census1(2, 45);
            r.field_gens = {w3, sqrt5()};
            t.push_back(std::move(r));
        }
        {
            ShephardToddRecord r;
            r.label = "N4";
            r.exceptional = true;
            r.rank = 4;
            r.order = 7680;
            r.census = census1(2, 40);
            r.field_gens = {i4};
            t.push_back(std::move(r));
        }
        {
            ShephardToddRecord r;
            r.label = "O4";
            r.exceptional = true;
            r.rank = 4;
            r.order = 46080;
            r.census = census1(2, 60);
            r.field_gens = {i4};
            t.push_back(std::move(r));
        }
        {
            ShephardToddRecord r;
            r.label = "L4";
            r.exceptional = true;
            r.rank = 4;
            r.order = 155520;
            r.census = census1(3, 80);
            r.field_gens = {w3};
            r.generators = [] { return l4_generators(); };
            r.validated = true;
            r.order_source = r.census_source = r.field_source = Source::Computed;
            t.push_back(std::move(r));
        }
        {
            ShephardToddRecord r;
            r.label = "K5";
            r.exceptional = true;
            r.rank = 5;
            r.order = 51840;
            r.census = census1(2, 45);
            r.field_gens = {w3};
            r.generators = [] { return k5_generators(); };
            r.validated = true;
            r.order_source = r.census_source = r.field_source = Source::Computed;
            t.push_back(std::move(r));
        }
        {
            ShephardToddRecord r;
            r.label = "K6";
            r.exceptional = true;
            r.rank = 6;
            r.order = 39191040;
            r.census = census1(2, 126);
            r.field_gens = {w3};
            t.push_back(std::move(r));
        }
        return t;
    }();
    return table;
}

// ---------------------------------------------------------------------------
// recognition

struct ReflectionGroupId {
    enum class Kind { Gmpn, Dihedral, Weyl, Exceptional, Unrecognized };
    Kind kind = Kind::Unrecognized;
    unsigned long m = 0, p = 0, n = 0;  // imprimitive parameters
    unsigned long order = 0;
    std::string label;
    bool pseudoreflections_generate = true;
    std::string note;
};

inline ReflectionGroupId recognize(const GroupClosure& g,
                                   const std::vector<Matrix>& generators) {
    if (!g.completed) throw std::invalid_argument("recognize: closure incomplete");
    if (g.elements.empty()) throw std::invalid_argument("recognize: empty closure");
    ReflectionGroupId out;
    out.order = g.order();
    const unsigned long rank = g.elements.front().rows();

    std::vector<Matrix> prefs;
    for (const auto& e : g.elements)
        if (is_pseudoreflection(e)) prefs.push_back(e);
    if (prefs.empty() || closure(prefs, g.order()).order() != g.order()) {
        out.pseudoreflections_generate = false;
        out.note = "pseudoreflections generate a proper subgroup; not a reflection group";
        return out;
    }

    bool monomial = true;
    for (const auto& gen : generators)
        if (!is_monomial(gen)) monomial = false;
    if (monomial && !generators.empty()) {
        const Cyclotomic zero;
        // A diagonal change of basis fixes every diagonal element of the
        // closure, so it cannot change the group being recognized, but it can
        // shrink the cyclic group the entries generate.  Scale a spanning tree
        // of the coordinate graph so its entries become one, then read off the
        // entry orders in the rescaled coordinates.
        std::vector<Cyclotomic> scale(rank, Cyclotomic(1));
        std::vector<char> seen(rank, 0);
        if (rank) seen[0] = 1;
        for (unsigned long pass = 0; pass + 1 < rank; ++pass)
            for (const auto& gen : generators)
                for (unsigned long i = 0; i < rank; ++i)
                    for (unsigned long j = 0; j < rank; ++j)
                        if (i != j && seen[j] && !seen[i] && !(gen(i, j) == zero)) {
                            scale[i] = scale[j] * gen(i, j).inverse();
                            seen[i] = 1;
                        }
        auto rescaled = [&](const Matrix& a) {
            Matrix r(a.rows(), a.cols());
            for (unsigned long i = 0; i < a.rows(); ++i)
                for (unsigned long j = 0; j < a.cols(); ++j)
                    if (!(a(i, j) == zero))
                        r(i, j) = scale[i] * a(i, j) * scale[j].inverse();
            return r;
        };

        unsigned long m = 1, tord = 1;
        bool entries_ok = true;
        for (const auto& gen : generators) {
            const Matrix ngen = rescaled(gen);
            for (unsigned long i = 0; i < ngen.rows() && entries_ok; ++i)
                for (unsigned long j = 0; j < ngen.cols() && entries_ok; ++j)
                    if (!(ngen(i, j) == zero)) {
                        const auto r = is_root_of_unity(ngen(i, j));
                        if (!r) entries_ok = false;
                        else m = lcm_ul(m, r->order);
                    }
            if (!entries_ok) break;
            const auto d = is_root_of_unity(monomial_delta(ngen));
            if (!d) entries_ok = false;
            else tord = lcm_ul(tord, d->order);
        }
        if (entries_ok) {
            const unsigned long p = m / tord;
            unsigned long expected = 1;
            for (unsigned long i = 0; i < rank; ++i) expected *= m;
            for (unsigned long i = 2; i <= rank; ++i) expected *= i;
            expected /= p;
            bool all_members = (g.order() == expected);
            for (const auto& e : g.elements) {
                if (!all_members) break;
                if (!gmpn_membership(rescaled(e), m, p)) all_members = false;
            }
            if (all_members) {
                out.m = m;
                out.p = p;
                out.n = rank;
                if (rank == 2 && p == m && m >= 2) {
                    out.kind = ReflectionGroupId::Kind::Dihedral;
                    out.label = "Dih(" + std::to_string(2 * m) + ")";
                } else {
                    out.kind = ReflectionGroupId::Kind::Gmpn;
                    out.label = "G(" + std::to_string(m) + "," + std::to_string(p) +
                                "," + std::to_string(rank) + ")";
                }
                return out;
            }
        }
    }

    const auto census = pseudoreflection_census(g);
    std::vector<Cyclotomic> traces;
    traces.reserve(g.elements.size());
    for (const auto& e : g.elements) traces.push_back(e.trace());
    const TraceFieldDescriptor field = subfield_descriptor(traces);

    const ShephardToddRecord* hit = nullptr;
    unsigned long hits = 0;
    for (const auto& row : shephard_todd_table()) {
        if (row.rank != rank || row.order != g.order() || row.census != census)
            continue;
        if (!field.same_field(subfield_descriptor(row.field_gens))) continue;
        hit = &row;
        ++hits;
    }
    if (hits == 1) {
        out.kind = hit->exceptional      ? ReflectionGroupId::Kind::Exceptional
                   : hit->label.rfind("I2(", 0) == 0 ? ReflectionGroupId::Kind::Dihedral
                                                     : ReflectionGroupId::Kind::Weyl;
        out.label = hit->label;
        return out;
    }
    out.note = hits == 0 ? "no reference row matches rank, order, census, and trace field"
                         : "multiple reference rows match";
    return out;
}

}  // namespace cym
