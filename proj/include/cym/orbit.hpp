#pragma once

#include <cmath>
#include <deque>
#include <map>

#include "cym/embed.hpp"
#include "cym/tuple.hpp"

namespace cym {

// One edge of the breadth-first spanning tree: the move applied to the
// representative of `parent` that discovered this key.  parent == -1 marks
// the starting tuple.
struct OrbitWitness {
    long parent = -1;
    unsigned long move = 0;
    bool inverse = false;
};

struct OrbitReport {
    std::vector<TraceKey> keys;       // discovery order
    std::vector<OrbitWitness> tree;   // parallel to keys
    bool exhausted = false;
    unsigned long budget = 0;

    unsigned long orbit_size() const { return static_cast<unsigned long>(keys.size()); }
};

// Breadth-first closure of the braid action on trace keys.  Deterministic:
// moves are tried with index ascending, forward before inverse.  If more than
// `budget` distinct keys appear the search stops with exhausted == false.
inline OrbitReport orbit_enumerate(const MonodromyTuple& start, unsigned long budget = 100000) {
    if (budget < 1) throw std::invalid_argument("orbit_enumerate: budget must be positive");
    if (start.rank != 2)
        throw std::invalid_argument("orbit_enumerate: keys are only faithful in rank 2");
    TupleCheck check = validate_tuple(start);
    if (!check.ok())
        throw std::invalid_argument("orbit_enumerate: invalid tuple: " + check.violations.front());
    if (check.all_scalar)
        throw std::invalid_argument("orbit_enumerate: tuple is scalar at every point");
    if (!is_irreducible(start))
        throw std::invalid_argument("orbit_enumerate: tuple is reducible");

    OrbitReport report;
    report.budget = budget;
    std::map<TraceKey, std::size_t> seen;
    std::deque<MonodromyTuple> queue;  // representatives, by discovery index
    const unsigned long n = start.points();

    TraceKey k0 = detail::trace_key_unchecked(start);
    seen.emplace(std::move(k0), 0);
    report.keys.push_back(seen.begin()->first);
    report.tree.push_back(OrbitWitness{});
    queue.push_back(start);

    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (unsigned long i = 1; i < n; ++i) {
            for (int dir = 0; dir < 2; ++dir) {
                MonodromyTuple next = hurwitz_move(queue[head], i, dir == 1);
                TraceKey key = detail::trace_key_unchecked(next);
                auto it = seen.find(key);
                if (it != seen.end()) continue;
                if (report.keys.size() == budget) {
                    report.exhausted = false;
                    return report;
                }
                const std::size_t id = report.keys.size();
                seen.emplace(key, id);
                report.keys.push_back(std::move(key));
                report.tree.push_back(
                    OrbitWitness{static_cast<long>(head), i, dir == 1});
                queue.push_back(std::move(next));
            }
        }
    }
    report.exhausted = true;
    return report;
}

// Replay the spanning-tree word that reaches keys[id] from the start tuple.
inline MonodromyTuple orbit_representative(const MonodromyTuple& start,
                                           const OrbitReport& report, std::size_t id) {
    if (id >= report.tree.size())
        throw std::invalid_argument("orbit_representative: index out of range");
    std::vector<std::size_t> path;
    for (long cur = static_cast<long>(id); cur > 0;
         cur = report.tree[static_cast<std::size_t>(cur)].parent)
        path.push_back(static_cast<std::size_t>(cur));
    MonodromyTuple t = start;
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        const OrbitWitness& w = report.tree[*it];
        t = hurwitz_move(t, w.move, w.inverse);
    }
    return t;
}

// Independent floating enclosure of the same closure, used to cross-check the
// exact count.  Keys are boxes around every length <= 3 trace; two keys are
// identified when all coordinates overlap, so the reported size can only
// undercount, never overcount.  Buckets are keyed by truncated midpoints and
// probed with their neighbours so near-boundary boxes still meet.
struct IntervalOrbitReport {
    unsigned long size = 0;
    bool exhausted = false;
};

inline IntervalOrbitReport orbit_enumerate_interval(const MonodromyTuple& start,
                                                    unsigned long budget = 100000,
                                                    unsigned long precision = 128) {
    if (budget < 1) throw std::invalid_argument("orbit_enumerate_interval: bad budget");
    struct BoxKey {
        std::vector<ComplexInterval> coords;
    };
    auto key_of = [&](const MonodromyTuple& t) {
        TraceKey exact = detail::trace_key_unchecked(t);
        BoxKey box;
        for (const auto& v : exact.values) box.coords.push_back(embed(v, 1, precision));
        return box;
    };
    auto same = [](const BoxKey& a, const BoxKey& b) {
        for (std::size_t i = 0; i < a.coords.size(); ++i)
            if (!a.coords[i].overlaps(b.coords[i])) return false;
        return true;
    };
    auto bucket_of = [](const BoxKey& k, long shift) {
        long long acc = 1469598103934665603LL;
        auto mixin = [&](double mid) {
            long long cell = static_cast<long long>(std::floor(mid * 1024.0));
            acc = (acc ^ cell) * 1099511628211LL;
        };
        // only the first coordinate is shifted; neighbour probing on one axis
        // is enough because equal exact keys yield identical boxes
        bool first = true;
        for (const auto& c : k.coords) {
            double re = c.re.midpoint_double();
            double im = c.im.midpoint_double();
            if (first) {
                mixin(re + static_cast<double>(shift) / 1024.0);
                first = false;
            } else {
                mixin(re);
            }
            mixin(im);
        }
        return acc;
    };

    std::map<long long, std::vector<std::size_t>> buckets;
    std::vector<BoxKey> keys;
    std::deque<MonodromyTuple> queue;
    auto lookup = [&](const BoxKey& k) -> bool {
        for (long shift = -1; shift <= 1; ++shift) {
            auto it = buckets.find(bucket_of(k, shift));
            if (it == buckets.end()) continue;
            for (std::size_t id : it->second)
                if (same(k, keys[id])) return true;
        }
        return false;
    };
    auto insert = [&](BoxKey k) {
        buckets[bucket_of(k, 0)].push_back(keys.size());
        keys.push_back(std::move(k));
    };

    IntervalOrbitReport report;
    insert(key_of(start));
    queue.push_back(start);
    const unsigned long n = start.points();
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (unsigned long i = 1; i < n; ++i) {
            for (int dir = 0; dir < 2; ++dir) {
                MonodromyTuple next = hurwitz_move(queue[head], i, dir == 1);
                BoxKey key = key_of(next);
                if (lookup(key)) continue;
                if (keys.size() == budget) {
                    report.size = static_cast<unsigned long>(keys.size());
                    report.exhausted = false;
                    return report;
                }
                insert(std::move(key));
                queue.push_back(std::move(next));
            }
        }
    }
    report.size = static_cast<unsigned long>(keys.size());
    report.exhausted = true;
    return report;
}

}  // namespace cym
