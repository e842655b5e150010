#pragma once

#include <algorithm>

#include "cym/matrix.hpp"

namespace cym {

// Describes the subfield of Q(zeta_conductor) fixed by fixing_subgroup;
// conductor is minimal for the field (so no proper cyclotomic subfield
// contains it).
struct TraceFieldDescriptor {
    unsigned long conductor = 1;
    std::vector<unsigned long> fixing_subgroup;  // residues mod conductor, sorted
    unsigned long degree = 1;
    bool totally_real = true;
    unsigned long word_length = 0;  // 0 when built from raw values

    bool same_field(const TraceFieldDescriptor& o) const {
        return conductor == o.conductor && fixing_subgroup == o.fixing_subgroup &&
               degree == o.degree && totally_real == o.totally_real;
    }
};

// Descriptor of the field generated by the given values.
inline TraceFieldDescriptor subfield_descriptor(const std::vector<Cyclotomic>& values) {
    unsigned long m = 1;
    for (const auto& v : values) m = lcm_ul(m, v.conductor());
    m = normalize_conductor(m);
    const auto& dat = detail::conductor_data(m);

    TraceFieldDescriptor out;
    if (m == 1) {
        out.conductor = 1;
        out.fixing_subgroup = {1};
        out.degree = 1;
        out.totally_real = true;
        return out;
    }
    // subgroup H of (Z/m)^* fixing every value
    std::vector<unsigned long> big;
    for (unsigned long k : dat.units) {
        bool fixes = true;
        for (const auto& v : values)
            if (v.galois(k) != v) {
                fixes = false;
                break;
            }
        if (fixes) big.push_back(k);
    }
    // minimal conductor f: smallest divisor with ker((Z/m)^* -> (Z/f)^*)
    // inside H
    unsigned long f = m;
    for (unsigned long d : dat.divs) {
        if (d % 4 == 2) continue;
        bool kernel_inside = true;
        for (unsigned long k : dat.units) {
            if (k % d != 1 % d) continue;
            if (!std::binary_search(big.begin(), big.end(), k)) {
                kernel_inside = false;
                break;
            }
        }
        if (kernel_inside) {
            f = d;
            break;  // divisors ascend
        }
    }
    out.conductor = f;
    if (f == 1) {
        out.fixing_subgroup = {1};
        out.degree = 1;
        out.totally_real = true;
        return out;
    }
    std::vector<unsigned long> image;
    for (unsigned long k : big) {
        const unsigned long r = k % f;
        if (!std::count(image.begin(), image.end(), r)) image.push_back(r);
    }
    std::sort(image.begin(), image.end());
    out.fixing_subgroup = std::move(image);
    const unsigned long phi_f = detail::conductor_data(f).phi;
    if (phi_f % out.fixing_subgroup.size() != 0)
        throw std::logic_error("trace field: subgroup size does not divide phi");
    out.degree = phi_f / out.fixing_subgroup.size();
    out.totally_real = std::binary_search(out.fixing_subgroup.begin(),
                                          out.fixing_subgroup.end(), f - 1) ||
                       f == 1;
    return out;
}

// Field generated by the traces of all words of length <= word_length in the
// generators, plus any extra values supplied by the caller.
inline TraceFieldDescriptor trace_field(const std::vector<Matrix>& mats,
                                        const std::vector<Cyclotomic>& extra_traces = {},
                                        unsigned long word_length = 3) {
    for (const auto& g : mats)
        if (!g.is_square() || g.rows() != mats.front().rows())
            throw std::invalid_argument("trace_field: generators of unequal size");
    std::vector<Cyclotomic> traces = extra_traces;
    std::vector<Matrix> layer{mats};
    for (unsigned long len = 1; len <= word_length && !mats.empty(); ++len) {
        for (const auto& w : layer) traces.push_back(w.trace());
        if (len == word_length) break;
        std::vector<Matrix> next;
        next.reserve(layer.size() * mats.size());
        for (const auto& w : layer)
            for (const auto& g : mats) next.push_back(w * g);
        layer = std::move(next);
    }
    TraceFieldDescriptor out = subfield_descriptor(traces);
    out.word_length = word_length;
    return out;
}

}  // namespace cym
