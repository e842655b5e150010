#pragma once

#include <map>
#include <string>
#include <vector>

#include "cym/matrix.hpp"

namespace cym {

// Multiplicative closure of a generating set, abandoned once more than `cap`
// elements appear.  A finite set of invertible matrices closed under products
// is a group, so no explicit inverses are needed.  Elements come back in
// deterministic discovery order, identity first.  When word tracking is on,
// words[i] lists generator indices whose left-to-right product equals
// elements[i]; the identity gets the empty word.
struct GroupClosure {
    std::vector<Matrix> elements;
    std::vector<std::vector<unsigned long>> words;
    unsigned long cap = 0;
    bool completed = false;

    unsigned long order() const { return static_cast<unsigned long>(elements.size()); }
};

inline GroupClosure closure(const std::vector<Matrix>& gens, unsigned long cap,
                            bool track_words = false) {
    GroupClosure out;
    out.cap = cap;
    if (gens.empty()) throw std::invalid_argument("closure: no generators");
    const unsigned long n = gens.front().rows();
    unsigned long m = 1;
    for (const auto& g : gens) {
        if (!g.is_square() || g.rows() != n)
            throw std::invalid_argument("closure: size mismatch");
        m = lcm_ul(m, g.conductor());
    }
    std::map<std::string, std::size_t> seen;
    auto add = [&](Matrix g, std::vector<unsigned long> w) -> bool {
        std::string key = g.key_at(m);
        if (seen.count(key)) return false;
        seen.emplace(std::move(key), out.elements.size());
        out.elements.push_back(std::move(g));
        if (track_words) out.words.push_back(std::move(w));
        return true;
    };
    add(Matrix::identity(n), {});
    for (unsigned long i = 0; i < gens.size(); ++i) add(gens[i], {i});
    for (std::size_t head = 0; head < out.elements.size(); ++head) {
        for (unsigned long i = 0; i < gens.size(); ++i) {
            if (out.elements.size() > cap) return out;  // completed stays false
            std::vector<unsigned long> w;
            if (track_words) {
                w = out.words[head];
                w.push_back(i);
            }
            add(out.elements[head] * gens[i], std::move(w));
        }
    }
    if (out.elements.size() > cap) return out;
    out.completed = true;
    return out;
}

}  // namespace cym
