#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cym/closure.hpp"
#include "cym/spectrum.hpp"

namespace cym {

inline unsigned long element_order(const Matrix& g, unsigned long bound = 100000) {
    if (!g.is_square()) throw std::invalid_argument("element_order: not square");
    const Matrix id = Matrix::identity(g.rows());
    Matrix p = g;
    for (unsigned long k = 1; k <= bound; ++k) {
        if (p == id) return k;
        p = p * g;
    }
    throw std::domain_error("element_order: bound exceeded");
}

// reflection order -> count, over a fully enumerated group
inline std::map<unsigned long, unsigned long> pseudoreflection_census(const GroupClosure& g) {
    if (!g.completed)
        throw std::invalid_argument("pseudoreflection_census: closure incomplete");
    std::map<unsigned long, unsigned long> out;
    for (const auto& e : g.elements)
        if (is_pseudoreflection(e)) ++out[element_order(e, g.order() + 1)];
    return out;
}

inline bool is_monomial(const Matrix& a) {
    if (!a.is_square()) return false;
    const Cyclotomic zero;
    for (unsigned long i = 0; i < a.rows(); ++i) {
        unsigned long nz = 0;
        for (unsigned long j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == zero)) ++nz;
        if (nz != 1) return false;
    }
    for (unsigned long j = 0; j < a.cols(); ++j) {
        unsigned long nz = 0;
        for (unsigned long i = 0; i < a.rows(); ++i)
            if (!(a(i, j) == zero)) ++nz;
        if (nz != 1) return false;
    }
    return true;
}

// product of the nonzero entries of a monomial matrix
inline Cyclotomic monomial_delta(const Matrix& a) {
    if (!is_monomial(a)) throw std::invalid_argument("monomial_delta: not monomial");
    Cyclotomic d(1);
    const Cyclotomic zero;
    for (unsigned long i = 0; i < a.rows(); ++i)
        for (unsigned long j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == zero)) d = d * a(i, j);
    return d;
}

// membership test for the imprimitive group of monomial matrices whose
// entries are m-th roots of unity and whose entry product is an (m/p)-th root
inline bool gmpn_membership(const Matrix& a, unsigned long m, unsigned long p) {
    if (m == 0 || p == 0 || m % p != 0)
        throw std::invalid_argument("gmpn_membership: need p | m");
    if (!is_monomial(a)) return false;
    const Cyclotomic zero;
    const Cyclotomic one(1);
    for (unsigned long i = 0; i < a.rows(); ++i)
        for (unsigned long j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == zero) && !(a(i, j).pow(static_cast<long>(m)) == one))
                return false;
    const Cyclotomic d = monomial_delta(a);
    return d.pow(static_cast<long>(m / p)) == one;
}

// underlying permutation of a monomial matrix: image[j] = i with a(i,j) != 0
inline std::vector<unsigned long> project_to_symmetric_group(const Matrix& a) {
    if (!is_monomial(a))
        throw std::invalid_argument("project_to_symmetric_group: not monomial");
    const Cyclotomic zero;
    std::vector<unsigned long> image(a.cols(), 0);
    for (unsigned long j = 0; j < a.cols(); ++j)
        for (unsigned long i = 0; i < a.rows(); ++i)
            if (!(a(i, j) == zero)) image[j] = i;
    return image;
}

}  // namespace cym
