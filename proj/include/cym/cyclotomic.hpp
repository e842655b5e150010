#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cym/polynomial.hpp"
#include "cym/rational.hpp"

namespace cym {

// Conductors are kept out of the residue class 2 mod 4, where the field
// coincides with the one at half the conductor.
inline unsigned long normalize_conductor(unsigned long m) {
    if (m == 0) throw std::invalid_argument("conductor must be positive");
    return (m % 4 == 2) ? m / 2 : m;
}

namespace detail {

inline unsigned long euler_phi(unsigned long m) {
    unsigned long result = m;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

inline std::vector<unsigned long> divisors_of(unsigned long m) {
    std::vector<unsigned long> small, large;
    for (unsigned long d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            small.push_back(d);
            if (d != m / d) large.push_back(m / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

// Minimal polynomial of a primitive m-th root of unity, by the recursive
// quotient x^m - 1 = prod_{d | m} Phi_d.
inline Poly<Rational> cyclotomic_poly(unsigned long m) {
    static std::map<unsigned long, Poly<Rational>> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }
    Poly<Rational> num = Poly<Rational>::x_power(m) - Poly<Rational>::constant(Rational(1));
    Poly<Rational> result = num;
    for (unsigned long d : divisors_of(m)) {
        if (d == m) continue;
        result = divmod(result, cyclotomic_poly(d)).quot;
    }
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(m, result);
    return result;
}

struct ConductorData {
    unsigned long m = 1;
    unsigned long phi = 1;
    Poly<Rational> min_poly;
    // red[j - phi] holds the coefficients of x^j reduced mod Phi_m, phi <= j < m
    std::vector<std::vector<Rational>> red;
    std::vector<unsigned long> units;  // (Z/m)^* sorted ascending
    std::vector<unsigned long> divs;

    explicit ConductorData(unsigned long mm) : m(mm) {
        phi = euler_phi(m);
        min_poly = cyclotomic_poly(m);
        divs = divisors_of(m);
        for (unsigned long k = 1; k <= m; ++k)
            if (std::gcd(k, m) == 1) units.push_back(k % m);
        if (m == 1) units = {0};  // the identity residue mod 1
        red.reserve(m > phi ? m - phi : 0);
        std::vector<Rational> row(phi, Rational(0));
        // x^phi = -(lower coefficients of Phi)
        for (unsigned long i = 0; i < phi; ++i) row[i] = -min_poly.at(i);
        if (phi < m) red.push_back(row);
        for (unsigned long j = phi + 1; j < m; ++j) {
            std::vector<Rational> next(phi, Rational(0));
            const std::vector<Rational>& prev = red.back();
            for (unsigned long i = 0; i + 1 < phi; ++i) next[i + 1] = prev[i];
            const Rational& top = prev[phi - 1];
            if (top != 0)
                for (unsigned long i = 0; i < phi; ++i) next[i] += top * red[0][i];
            red.push_back(std::move(next));
        }
    }

    // Fold a raw coefficient vector indexed by exponents 0..m-1 into the
    // power basis of length phi.
    std::vector<Rational> reduce(const std::vector<Rational>& raw) const {
        std::vector<Rational> out(phi, Rational(0));
        for (unsigned long j = 0; j < raw.size() && j < m; ++j) {
            if (raw[j] == 0) continue;
            if (j < phi) {
                out[j] += raw[j];
            } else {
                const std::vector<Rational>& row = red[j - phi];
                for (unsigned long i = 0; i < phi; ++i)
                    if (row[i] != 0) out[i] += raw[j] * row[i];
            }
        }
        return out;
    }
};

inline const ConductorData& conductor_data(unsigned long m) {
    static std::map<unsigned long, std::unique_ptr<ConductorData>> cache;
    static std::shared_mutex mtx;
    m = normalize_conductor(m);
    {
        std::shared_lock<std::shared_mutex> lock(mtx);
        auto it = cache.find(m);
        if (it != cache.end()) return *it->second;
    }
    auto data = std::make_unique<ConductorData>(m);
    std::unique_lock<std::shared_mutex> lock(mtx);
    auto [it, inserted] = cache.emplace(m, std::move(data));
    return *it->second;
}

// Coordinates of zeta_m^(i * m/d) at conductor m for i < phi(d): the image of
// the conductor-d power basis inside the conductor-m field.  d | m, both
// normalized.
inline const std::vector<std::vector<Rational>>& promotion_table(unsigned long d,
                                                                 unsigned long m) {
    static std::map<std::pair<unsigned long, unsigned long>,
                    std::unique_ptr<std::vector<std::vector<Rational>>>>
        cache;
    static std::shared_mutex mtx;
    const auto key = std::make_pair(d, m);
    {
        std::shared_lock<std::shared_mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return *it->second;
    }
    const ConductorData& dat_m = conductor_data(m);
    const ConductorData& dat_d = conductor_data(d);
    auto table = std::make_unique<std::vector<std::vector<Rational>>>();
    table->reserve(dat_d.phi);
    const unsigned long step = m / d;
    for (unsigned long i = 0; i < dat_d.phi; ++i) {
        std::vector<Rational> raw(m, Rational(0));
        raw[(i * step) % m] = 1;
        table->push_back(dat_m.reduce(raw));
    }
    std::unique_lock<std::shared_mutex> lock(mtx);
    auto [it, inserted] = cache.emplace(key, std::move(table));
    return *it->second;
}

// Generators of the Galois stabilizer {k in (Z/m)^*: k = 1 mod d}.
inline const std::vector<unsigned long>& stabilizer_generators(unsigned long d,
                                                               unsigned long m) {
    static std::map<std::pair<unsigned long, unsigned long>,
                    std::unique_ptr<std::vector<unsigned long>>>
        cache;
    static std::shared_mutex mtx;
    const auto key = std::make_pair(d, m);
    {
        std::shared_lock<std::shared_mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return *it->second;
    }
    const ConductorData& dat = conductor_data(m);
    std::vector<unsigned long> members;
    for (unsigned long k : dat.units)
        if (k % d == 1 % d) members.push_back(k);
    auto gens = std::make_unique<std::vector<unsigned long>>();
    std::vector<unsigned long> closed{1 % m};
    for (unsigned long k : members) {
        bool have = false;
        for (unsigned long c : closed)
            if (c == k) {
                have = true;
                break;
            }
        if (have) continue;
        gens->push_back(k);
        std::vector<unsigned long> frontier = closed;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            const unsigned long next = (frontier[i] * k) % m;
            bool seen = false;
            for (unsigned long c : closed)
                if (c == next) {
                    seen = true;
                    break;
                }
            if (!seen) {
                closed.push_back(next);
                frontier.push_back(next);
            }
        }
    }
    std::unique_lock<std::shared_mutex> lock(mtx);
    auto [it, inserted] = cache.emplace(key, std::move(gens));
    return *it->second;
}

// Rational solver for re-expressing a conductor-m element in the conductor-d
// basis: a choice of phi(d) coordinate rows whose square subsystem is
// invertible, with the inverse stored.
struct DemotionSolver {
    std::vector<unsigned long> rows;
    std::vector<std::vector<Rational>> inverse;  // phi(d) x phi(d)
};

inline const DemotionSolver& demotion_solver(unsigned long d, unsigned long m) {
    static std::map<std::pair<unsigned long, unsigned long>,
                    std::unique_ptr<DemotionSolver>>
        cache;
    static std::shared_mutex mtx;
    const auto key = std::make_pair(d, m);
    {
        std::shared_lock<std::shared_mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return *it->second;
    }
    const auto& table = promotion_table(d, m);
    const unsigned long phi_m = conductor_data(m).phi;
    const unsigned long phi_d = conductor_data(d).phi;
    // Row-reduce the phi_m x phi_d system to locate phi_d independent rows.
    std::vector<std::vector<Rational>> work(phi_m, std::vector<Rational>(phi_d));
    for (unsigned long r = 0; r < phi_m; ++r)
        for (unsigned long c = 0; c < phi_d; ++c) work[r][c] = table[c][r];
    std::vector<unsigned long> chosen;
    std::vector<std::vector<Rational>> elim;  // reduced copies of chosen rows
    for (unsigned long r = 0; r < phi_m && chosen.size() < phi_d; ++r) {
        std::vector<Rational> row = work[r];
        for (std::size_t i = 0; i < elim.size(); ++i) {
            // eliminate using pivot column of elim[i]
            unsigned long pc = 0;
            while (pc < phi_d && elim[i][pc] == 0) ++pc;
            if (pc < phi_d && row[pc] != 0) {
                const Rational f = row[pc] / elim[i][pc];
                for (unsigned long c = 0; c < phi_d; ++c) row[c] -= f * elim[i][c];
            }
        }
        bool nonzero = false;
        for (unsigned long c = 0; c < phi_d; ++c)
            if (row[c] != 0) {
                nonzero = true;
                break;
            }
        if (nonzero) {
            chosen.push_back(r);
            elim.push_back(std::move(row));
        }
    }
    if (chosen.size() != phi_d)
        throw std::logic_error("demotion: promotion table is rank deficient");
    // Invert the square subsystem by Gauss-Jordan.
    std::vector<std::vector<Rational>> aug(phi_d, std::vector<Rational>(2 * phi_d, Rational(0)));
    for (unsigned long i = 0; i < phi_d; ++i) {
        for (unsigned long j = 0; j < phi_d; ++j) aug[i][j] = work[chosen[i]][j];
        aug[i][phi_d + i] = 1;
    }
    for (unsigned long col = 0; col < phi_d; ++col) {
        unsigned long piv = col;
        while (piv < phi_d && aug[piv][col] == 0) ++piv;
        if (piv == phi_d) throw std::logic_error("demotion: singular subsystem");
        std::swap(aug[col], aug[piv]);
        const Rational p = aug[col][col];
        for (unsigned long j = 0; j < 2 * phi_d; ++j) aug[col][j] /= p;
        for (unsigned long i = 0; i < phi_d; ++i) {
            if (i == col || aug[i][col] == 0) continue;
            const Rational f = aug[i][col];
            for (unsigned long j = 0; j < 2 * phi_d; ++j) aug[i][j] -= f * aug[col][j];
        }
    }
    auto solver = std::make_unique<DemotionSolver>();
    solver->rows = chosen;
    solver->inverse.assign(phi_d, std::vector<Rational>(phi_d));
    for (unsigned long i = 0; i < phi_d; ++i)
        for (unsigned long j = 0; j < phi_d; ++j) solver->inverse[i][j] = aug[i][phi_d + j];
    std::unique_lock<std::shared_mutex> lock(mtx);
    auto [it, inserted] = cache.emplace(key, std::move(solver));
    return *it->second;
}

}  // namespace detail

// An element of the union of all cyclotomic fields, stored at the minimal
// conductor that contains it (never 2 mod 4) in the power basis
// 1, z, ..., z^(phi-1) of that conductor.
class Cyclotomic {
  public:
    Cyclotomic() : cond_(1), c_{Rational(0)} {}
    Cyclotomic(int v) : cond_(1), c_{Rational(v)} {}
    explicit Cyclotomic(Rational v) : cond_(1), c_{std::move(v)} {}

    // Interpret raw coefficients as sum_j raw[j] * zeta_m^j and canonicalize.
    static Cyclotomic from_raw(unsigned long m, std::vector<Rational> raw) {
        Cyclotomic x;
        x.assign_raw(m, std::move(raw));
        return x;
    }

    static Cyclotomic zeta(unsigned long m) { return zeta_power(m, 1); }

    static Cyclotomic zeta_power(unsigned long m, long e) {
        if (m == 0) throw std::invalid_argument("zeta: conductor must be positive");
        long r = e % static_cast<long>(m);
        if (r < 0) r += static_cast<long>(m);
        std::vector<Rational> raw(m, Rational(0));
        raw[static_cast<unsigned long>(r)] = 1;
        return from_raw(m, std::move(raw));
    }

    unsigned long conductor() const { return cond_; }
    const std::vector<Rational>& coefficients() const { return c_; }

    bool is_zero() const { return cond_ == 1 && c_[0] == 0; }
    bool is_rational() const { return cond_ == 1; }
    const Rational& rational_value() const {
        if (cond_ != 1) throw std::logic_error("cyclotomic: not a rational value");
        return c_[0];
    }

    bool operator==(const Cyclotomic& o) const { return cond_ == o.cond_ && c_ == o.c_; }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    // Coefficients of this value at an ambient conductor m (cond must divide m).
    std::vector<Rational> coefficients_at(unsigned long m) const {
        m = normalize_conductor(m);
        const auto& dat = detail::conductor_data(m);
        if (m % cond_ != 0)
            throw std::invalid_argument("cyclotomic: ambient conductor not a multiple");
        if (m == cond_) return c_;
        const auto& table = detail::promotion_table(cond_, m);
        std::vector<Rational> out(dat.phi, Rational(0));
        for (unsigned long i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (unsigned long j = 0; j < dat.phi; ++j)
                if (table[i][j] != 0) out[j] += c_[i] * table[i][j];
        }
        return out;
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.cond_ == 1 && b.cond_ == 1) return Cyclotomic(a.c_[0] + b.c_[0]);
        const unsigned long m = normalize_conductor(lcm_ul(a.cond_, b.cond_));
        std::vector<Rational> x = a.coefficients_at(m);
        const std::vector<Rational> y = b.coefficients_at(m);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
        Cyclotomic r;
        r.assign_reduced(m, std::move(x));
        return r;
    }
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.cond_ == 1 && b.cond_ == 1) return Cyclotomic(a.c_[0] - b.c_[0]);
        const unsigned long m = normalize_conductor(lcm_ul(a.cond_, b.cond_));
        std::vector<Rational> x = a.coefficients_at(m);
        const std::vector<Rational> y = b.coefficients_at(m);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
        Cyclotomic r;
        r.assign_reduced(m, std::move(x));
        return r;
    }
    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.cond_ == 1 && b.cond_ == 1) return Cyclotomic(a.c_[0] * b.c_[0]);
        if (a.cond_ == 1) {
            if (a.c_[0] == 0) return Cyclotomic();
            Cyclotomic r = b;
            for (auto& v : r.c_) v *= a.c_[0];
            return r;  // scaling cannot change the minimal conductor
        }
        if (b.cond_ == 1) return b * a;
        const unsigned long m = normalize_conductor(lcm_ul(a.cond_, b.cond_));
        const std::vector<Rational> x = a.coefficients_at(m);
        const std::vector<Rational> y = b.coefficients_at(m);
        std::vector<Rational> raw(m, Rational(0));
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < y.size(); ++j) {
                if (y[j] == 0) continue;
                raw[(i + j) % m] += x[i] * y[j];
            }
        }
        Cyclotomic r;
        r.assign_raw(m, std::move(raw));
        return r;
    }

    Cyclotomic inverse() const {
        if (is_zero()) throw std::domain_error("cyclotomic: division by zero");
        if (cond_ == 1) return Cyclotomic(Rational(1) / c_[0]);
        const auto& dat = detail::conductor_data(cond_);
        Poly<Rational> p{std::vector<Rational>(c_)};
        auto x = poly_xgcd(p, dat.min_poly);
        if (x.g.degree() != 0)
            throw std::logic_error("cyclotomic: inverse gcd is not a unit");
        std::vector<Rational> coeffs(dat.phi, Rational(0));
        for (unsigned long i = 0; i < dat.phi && i < x.u.c.size(); ++i)
            coeffs[i] = x.u.c[i] / x.g.c[0];
        // the inverse lives in exactly the same minimal field
        Cyclotomic r;
        r.cond_ = cond_;
        r.c_ = std::move(coeffs);
        return r;
    }

    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
        return a * b.inverse();
    }

    Cyclotomic pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Cyclotomic acc(1), base = *this;
        unsigned long n = static_cast<unsigned long>(e);
        while (n) {
            if (n & 1) acc = acc * base;
            base = (n >>= 1) ? base * base : base;
        }
        return acc;
    }

    // Image under the Galois automorphism zeta -> zeta^k, gcd(k, conductor)=1.
    Cyclotomic galois(unsigned long k) const {
        if (cond_ == 1) return *this;
        k %= cond_;
        if (std::gcd(k, cond_) != 1)
            throw std::invalid_argument("galois: exponent not coprime to conductor");
        if (k == 1) return *this;
        std::vector<Rational> raw(cond_, Rational(0));
        for (unsigned long j = 0; j < c_.size(); ++j)
            if (c_[j] != 0) raw[(j * k) % cond_] += c_[j];
        // conjugates share the minimal conductor, so skip the demotion scan
        const auto& dat = detail::conductor_data(cond_);
        Cyclotomic r;
        r.cond_ = cond_;
        r.c_ = dat.reduce(raw);
        return r;
    }

    Cyclotomic conj() const { return cond_ == 1 ? *this : galois(cond_ - 1); }
    bool is_real() const { return *this == conj(); }

  private:
    void assign_reduced(unsigned long m, std::vector<Rational> coeffs) {
        cond_ = m;
        c_ = std::move(coeffs);
        demote();
    }
    void assign_raw(unsigned long m, std::vector<Rational> raw) {
        if (m % 4 == 2) {
            // zeta_m = -zeta_(m/2)^((m/2+1)/2) when m/2 is odd
            const unsigned long h = m / 2;
            const unsigned long t = (h + 1) / 2;
            std::vector<Rational> folded(h, Rational(0));
            for (unsigned long j = 0; j < raw.size(); ++j) {
                if (raw[j] == 0) continue;
                const Rational v = (j % 2 == 0) ? raw[j] : -raw[j];
                folded[(j % m) * t % h] += v;
            }
            assign_raw(h, std::move(folded));
            return;
        }
        const auto& dat = detail::conductor_data(m);
        if (raw.size() > m) {
            std::vector<Rational> folded(m, Rational(0));
            for (unsigned long j = 0; j < raw.size(); ++j)
                if (raw[j] != 0) folded[j % m] += raw[j];
            raw = std::move(folded);
        }
        raw.resize(m, Rational(0));
        assign_reduced(m, dat.reduce(raw));
    }

    void demote() {
        if (cond_ == 1) return;
        // fast path: a bare rational
        bool flat = true;
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) {
                flat = false;
                break;
            }
        if (flat) {
            Rational v = c_[0];
            cond_ = 1;
            c_.assign(1, std::move(v));
            return;
        }
        const auto& dat = detail::conductor_data(cond_);
        for (unsigned long d : dat.divs) {
            if (d == cond_ || d % 4 == 2) continue;
            if (!fixed_by_stabilizer(d)) continue;
            const auto& solver = detail::demotion_solver(d, cond_);
            const unsigned long phi_d = detail::conductor_data(d).phi;
            std::vector<Rational> y(phi_d, Rational(0));
            for (unsigned long i = 0; i < phi_d; ++i)
                for (unsigned long j = 0; j < phi_d; ++j)
                    if (solver.inverse[i][j] != 0)
                        y[i] += solver.inverse[i][j] * c_[solver.rows[j]];
            cond_ = d;
            c_ = std::move(y);
            return;  // divisors ascend, so the first hit is minimal
        }
    }

    bool fixed_by_stabilizer(unsigned long d) const {
        const auto& gens = detail::stabilizer_generators(d, cond_);
        for (unsigned long k : gens)
            if (galois(k).c_ != c_) return false;
        return true;
    }

    unsigned long cond_;
    std::vector<Rational> c_;
};

inline Cyclotomic operator*(const Rational& s, const Cyclotomic& x) {
    return Cyclotomic(s) * x;
}

// Distinct images of x under the full Galois group of its minimal field.
inline std::vector<Cyclotomic> galois_conjugates(const Cyclotomic& x) {
    const auto& dat = detail::conductor_data(x.conductor());
    std::vector<Cyclotomic> out;
    for (unsigned long k : dat.units) {
        Cyclotomic img = x.conductor() == 1 ? x : x.galois(k);
        bool seen = false;
        for (const auto& e : out)
            if (e == img) {
                seen = true;
                break;
            }
        if (!seen) out.push_back(std::move(img));
    }
    return out;
}

// A root of unity in lowest terms: the value zeta_order^exponent with
// gcd(exponent, order) = 1 (order 1 means the value 1).
struct RootOfUnity {
    unsigned long order = 1;
    unsigned long exponent = 0;

    RootOfUnity() = default;
    RootOfUnity(unsigned long d, long e) {
        if (d == 0) throw std::invalid_argument("root of unity: zero order");
        long r = e % static_cast<long>(d);
        if (r < 0) r += static_cast<long>(d);
        unsigned long g = std::gcd(static_cast<unsigned long>(r), d);
        if (r == 0) g = d;
        order = d / g;
        exponent = static_cast<unsigned long>(r) / g;
        if (order == 1) exponent = 0;
    }

    static RootOfUnity one() { return RootOfUnity(); }
    static RootOfUnity minus_one() { return RootOfUnity(2, 1); }

    bool is_one() const { return order == 1; }
    Cyclotomic value() const {
        return Cyclotomic::zeta_power(order, static_cast<long>(exponent));
    }
    RootOfUnity inverse() const {
        return RootOfUnity(order, static_cast<long>(order - exponent % order));
    }
    friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
        const unsigned long d = lcm_ul(a.order, b.order);
        const long e = static_cast<long>(a.exponent * (d / a.order) +
                                         b.exponent * (d / b.order));
        return RootOfUnity(d, e);
    }
    RootOfUnity pow(long n) const {
        long e = (static_cast<long>(exponent) * (n % static_cast<long>(order))) %
                 static_cast<long>(order);
        return RootOfUnity(order, e);
    }
    bool operator==(const RootOfUnity& o) const {
        return order == o.order && exponent == o.exponent;
    }
    bool operator!=(const RootOfUnity& o) const { return !(*this == o); }
    bool operator<(const RootOfUnity& o) const {
        if (order != o.order) return order < o.order;
        return exponent < o.exponent;
    }
};

inline std::string to_string(const RootOfUnity& r) {
    if (r.order == 1) return "1";
    if (r.order == 2) return "-1";
    std::string s = "zeta" + std::to_string(r.order);
    if (r.exponent != 1) s += "^" + std::to_string(r.exponent);
    return s;
}

// The primitive order and exponent of x when x is a root of unity.  Roots of
// unity in the conductor-f field have order dividing lcm(2, f).
inline std::optional<RootOfUnity> is_root_of_unity(const Cyclotomic& x) {
    if (x.is_zero()) return std::nullopt;
    const unsigned long f = x.conductor();
    unsigned long candidate = 0;
    if (x.pow(static_cast<long>(f)) == Cyclotomic(1)) {
        candidate = f;
    } else if (f % 2 == 1 && x.pow(static_cast<long>(2 * f)) == Cyclotomic(1)) {
        candidate = 2 * f;
    } else {
        return std::nullopt;
    }
    // shrink to the exact multiplicative order by stripping primes
    std::vector<unsigned long> primes;
    unsigned long rest = candidate;
    for (unsigned long p = 2; p * p <= rest; ++p) {
        if (rest % p == 0) {
            primes.push_back(p);
            while (rest % p == 0) rest /= p;
        }
    }
    if (rest > 1) primes.push_back(rest);
    unsigned long d = candidate;
    for (unsigned long p : primes)
        while (d % p == 0 && x.pow(static_cast<long>(d / p)) == Cyclotomic(1)) d /= p;
    for (unsigned long e = 0; e < d; ++e) {
        if (d > 1 && std::gcd(e, d) != 1) continue;
        if (Cyclotomic::zeta_power(d, static_cast<long>(e)) == x)
            return RootOfUnity(d, static_cast<long>(e));
    }
    return std::nullopt;
}

// Shared helpers for a few quadratic irrationalities used across the suite.
inline Cyclotomic sqrt5() {
    // 2*(zeta5 + zeta5^4) + 1
    return Cyclotomic(2) * (Cyclotomic::zeta(5) + Cyclotomic::zeta_power(5, 4)) +
           Cyclotomic(1);
}
inline Cyclotomic sqrt2() { return Cyclotomic::zeta(8) + Cyclotomic::zeta_power(8, 7); }
inline Cyclotomic sqrt3() { return Cyclotomic::zeta(12) + Cyclotomic::zeta_power(12, 11); }
inline Cyclotomic golden_ratio() {
    return (Cyclotomic(1) + sqrt5()) / Cyclotomic(2);
}
inline Cyclotomic sqrt_minus7() {
    Cyclotomic g;
    const long residues[] = {1, 2, 4};
    const long nonresidues[] = {3, 5, 6};
    for (long r : residues) g = g + Cyclotomic::zeta_power(7, r);
    for (long n : nonresidues) g = g - Cyclotomic::zeta_power(7, n);
    return g;
}

}  // namespace cym
