#pragma once

// Combinatorics of length-(n+2) products of transpositions and identities in
// the symmetric group S_n: exhaustive pruned search for configurations with
// identity product, transitive support, and every index covered twice, plus
// the integer-arithmetic certificates that rule such configurations out for
// every n >= 5 except the one exhaustively searched case n = 6.

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace cym {

// One slot: a transposition {a,b} with 1 <= a < b <= n, or the identity (0,0).
struct ShadowEntry {
    unsigned a = 0, b = 0;

    ShadowEntry() = default;
    ShadowEntry(unsigned x, unsigned y) : a(x), b(y) {
        if (a > b) std::swap(a, b);
    }
    bool is_identity() const { return a == b; }
    bool operator==(const ShadowEntry& o) const { return a == o.a && b == o.b; }
    bool operator<(const ShadowEntry& o) const {
        if (a != o.a) return a < o.a;
        return b < o.b;
    }
};

// A sequence of n+2 slots.  All statistics are recomputed from the sequence.
struct ShadowConfig {
    unsigned long n = 0;
    std::vector<ShadowEntry> entries;

    unsigned long k() const {
        unsigned long c = 0;
        for (const auto& e : entries)
            if (!e.is_identity()) ++c;
        return c;
    }

    // image of j (1-based) under the product entries[0] ... entries.back()
    // applied right to left
    unsigned apply_product(unsigned j) const {
        for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
            if (it->is_identity()) continue;
            if (j == it->a) j = it->b;
            else if (j == it->b) j = it->a;
        }
        return j;
    }

    bool product_is_identity() const {
        for (unsigned j = 1; j <= n; ++j)
            if (apply_product(j) != j) return false;
        return true;
    }

    bool transitive() const {
        if (n == 0) return false;
        std::vector<unsigned> parent(n + 1);
        for (unsigned i = 0; i <= n; ++i) parent[i] = i;
        auto find = [&](unsigned x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& e : entries)
            if (!e.is_identity()) parent[find(e.a)] = find(e.b);
        const unsigned root = find(1);
        for (unsigned j = 2; j <= n; ++j)
            if (find(j) != root) return false;
        return true;
    }

    // a_i: in how many transpositions index i appears
    std::vector<unsigned long> appearance_counts() const {
        std::vector<unsigned long> a(n + 1, 0);
        for (const auto& e : entries)
            if (!e.is_identity()) {
                ++a[e.a];
                ++a[e.b];
            }
        return a;  // 1-based; a[0] unused
    }

    // c_j: one fewer than the number of elements in the trajectory of j under
    // the right-to-left partial products, consecutive repetitions removed
    std::vector<unsigned long> cycle_lengths() const {
        std::vector<unsigned long> c(n + 1, 0);
        for (unsigned j = 1; j <= n; ++j) {
            unsigned cur = j;
            unsigned long moves = 0;
            for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
                if (it->is_identity()) continue;
                if (cur == it->a) {
                    cur = it->b;
                    ++moves;
                } else if (cur == it->b) {
                    cur = it->a;
                    ++moves;
                }
            }
            c[j] = moves;
        }
        return c;
    }

    bool operator==(const ShadowConfig& o) const {
        return n == o.n && entries == o.entries;
    }
    bool operator<(const ShadowConfig& o) const {
        if (n != o.n) return n < o.n;
        return entries < o.entries;
    }
};

struct ShadowConstraints {
    bool symmetry_reduction = true;  // normalize the first transposition to (12)
    unsigned long node_cap = 0;      // 0 = unbounded
    unsigned workers = 1;
};

struct PruneStats {
    unsigned long distance = 0;      // suffix cannot reach the inverse prefix
    unsigned long connectivity = 0;  // too few slots left to connect the support
    unsigned long appearance = 0;    // too few slots left to cover every index twice
};

struct SearchReport {
    unsigned long n = 0;
    unsigned long nodes = 0;  // DFS nodes examined, after any reduction
    std::vector<ShadowConfig> configs;
    double seconds = 0;
    PruneStats pruned;
    bool partial = false;  // node cap hit; result not exhaustive

    bool certified_empty() const { return configs.empty() && !partial; }
};

namespace shadow_detail {

constexpr unsigned kMaxN = 16;

using Perm = std::array<std::uint8_t, kMaxN>;

struct SearchShared {
    std::atomic<unsigned long> nodes{0};
    std::atomic<bool> abort{false};
    unsigned long cap = 0;
};

struct Frame {
    Perm perm;                              // product of the prefix
    std::array<std::uint8_t, kMaxN> comp;   // union-find parents on supports
    std::array<std::uint8_t, kMaxN> count;  // appearances per index (0-based)
    unsigned components = 0;
};

inline unsigned uf_find(std::array<std::uint8_t, kMaxN>& p, unsigned x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
}

inline unsigned long cycle_count(const Perm& p, unsigned n) {
    std::array<bool, kMaxN> seen{};
    unsigned long c = 0;
    for (unsigned i = 0; i < n; ++i) {
        if (seen[i]) continue;
        ++c;
        for (unsigned j = i; !seen[j]; j = p[j]) seen[j] = true;
    }
    return c;
}

struct TaskResult {
    std::vector<ShadowConfig> configs;
    PruneStats pruned;
};

inline void dfs(unsigned n, unsigned k, unsigned depth, const Frame& frame,
                std::vector<std::pair<std::uint8_t, std::uint8_t>>& seq,
                const std::vector<std::pair<std::uint8_t, std::uint8_t>>& trans,
                SearchShared& shared, TaskResult& out) {
    if (shared.abort.load(std::memory_order_relaxed)) return;
    const unsigned long visited =
        shared.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (shared.cap && visited > shared.cap) {
        shared.abort.store(true, std::memory_order_relaxed);
        return;
    }

    if (depth == k) {
        for (unsigned i = 0; i < n; ++i)
            if (frame.perm[i] != i || frame.count[i] < 2) return;
        if (frame.components != 1) return;
        ShadowConfig cfg;
        cfg.n = n;
        for (const auto& t : seq)
            cfg.entries.emplace_back(t.first + 1, t.second + 1);
        cfg.entries.resize(n + 2);  // identity-filled trailing slots
        const auto cyc = cfg.cycle_lengths();
        for (unsigned j = 1; j <= n; ++j)
            if (cyc[j] < 2) return;
        out.configs.push_back(std::move(cfg));
        return;
    }

    const unsigned remaining = k - depth;
    const unsigned long dist = n - cycle_count(frame.perm, n);
    if (remaining < dist || ((remaining - dist) & 1)) {
        ++out.pruned.distance;
        return;
    }
    if (remaining + 1 < frame.components) {
        ++out.pruned.connectivity;
        return;
    }
    unsigned long deficiency = 0;
    for (unsigned i = 0; i < n; ++i)
        if (frame.count[i] < 2) deficiency += 2 - frame.count[i];
    if (deficiency > 2ul * remaining) {
        ++out.pruned.appearance;
        return;
    }

    for (const auto& t : trans) {
        Frame next = frame;
        std::swap(next.perm[t.first], next.perm[t.second]);
        const unsigned ra = uf_find(next.comp, t.first);
        const unsigned rb = uf_find(next.comp, t.second);
        if (ra != rb) {
            next.comp[ra] = rb;
            --next.components;
        }
        ++next.count[t.first];
        ++next.count[t.second];
        seq.push_back(t);
        dfs(n, k, depth + 1, next, seq, trans, shared, out);
        seq.pop_back();
    }
}

}  // namespace shadow_detail

inline SearchReport shadow_search(unsigned long n,
                                  const ShadowConstraints& constraints = {}) {
    using namespace shadow_detail;
    if (n < 2 || n > kMaxN)
        throw std::invalid_argument("shadow_search: n out of range");
    const auto start = std::chrono::steady_clock::now();
    SearchReport report;
    report.n = n;

    std::vector<std::pair<std::uint8_t, std::uint8_t>> trans;
    for (unsigned a = 0; a + 1 < n; ++a)
        for (unsigned b = a + 1; b < n; ++b)
            trans.emplace_back(static_cast<std::uint8_t>(a),
                               static_cast<std::uint8_t>(b));

    SearchShared shared;
    shared.cap = constraints.node_cap;

    Frame root;
    for (unsigned i = 0; i < kMaxN; ++i) {
        root.perm[i] = static_cast<std::uint8_t>(i);
        root.comp[i] = static_cast<std::uint8_t>(i);
        root.count[i] = 0;
    }
    root.components = static_cast<unsigned>(n);

    std::vector<unsigned> lengths;
    for (unsigned k = static_cast<unsigned>(n + (n & 1)); k <= n + 2; k += 2)
        lengths.push_back(k);

    // One task per (k, choice at the splitting slot); results are merged in
    // task order, so the outcome does not depend on scheduling.
    struct Task {
        unsigned k;
        std::vector<std::pair<std::uint8_t, std::uint8_t>> prefix;
        TaskResult result;
    };
    std::vector<Task> tasks;
    for (unsigned k : lengths) {
        if (constraints.symmetry_reduction) {
            if (k < 2) continue;
            for (const auto& t : trans) {
                Task task;
                task.k = k;
                task.prefix = {{0, 1}, t};
                tasks.push_back(std::move(task));
            }
        } else {
            for (const auto& t : trans) {
                Task task;
                task.k = k;
                task.prefix = {t};
                tasks.push_back(std::move(task));
            }
        }
    }

    auto run_task = [&](Task& task) {
        Frame frame = root;
        std::vector<std::pair<std::uint8_t, std::uint8_t>> seq;
        for (const auto& t : task.prefix) {
            std::swap(frame.perm[t.first], frame.perm[t.second]);
            const unsigned ra = uf_find(frame.comp, t.first);
            const unsigned rb = uf_find(frame.comp, t.second);
            if (ra != rb) {
                frame.comp[ra] = rb;
                --frame.components;
            }
            ++frame.count[t.first];
            ++frame.count[t.second];
            seq.push_back(t);
        }
        dfs(static_cast<unsigned>(n), task.k,
            static_cast<unsigned>(task.prefix.size()), frame, seq, trans, shared,
            task.result);
    };

    const unsigned workers = std::max(1u, constraints.workers);
    if (workers == 1) {
        for (auto& task : tasks) run_task(task);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= tasks.size()) return;
                    run_task(tasks[i]);
                }
            });
        for (auto& th : pool) th.join();
    }

    for (auto& task : tasks) {
        report.configs.insert(report.configs.end(),
                              std::make_move_iterator(task.result.configs.begin()),
                              std::make_move_iterator(task.result.configs.end()));
        report.pruned.distance += task.result.pruned.distance;
        report.pruned.connectivity += task.result.pruned.connectivity;
        report.pruned.appearance += task.result.pruned.appearance;
    }
    std::sort(report.configs.begin(), report.configs.end());
    report.nodes = shared.nodes.load();
    report.partial = shared.abort.load();
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

// ---------------------------------------------------------------------------
// arithmetic certificates

struct CountingStep {
    std::string text;
    bool holds = false;
};

struct CountingTrace {
    unsigned long n = 0;
    std::vector<CountingStep> steps;
    long final_lhs = 0;  // the closing inequality, which must fail
    long final_rhs = 0;
    bool contradiction = false;
};

inline CountingTrace counting_check(unsigned long n) {
    if (n < 5) throw std::invalid_argument("counting_check: needs n >= 5");
    if (n == 6)
        throw std::invalid_argument(
            "counting_check: n = 6 is settled by the exhaustive search");
    CountingTrace tr;
    tr.n = n;
    const long N = static_cast<long>(n);
    auto step = [&](std::string text, bool holds) {
        tr.steps.push_back({std::move(text), holds});
    };

    if (n % 2 == 1) {
        const long bound = 2 * (N + 1);
        step("k is even and k <= N+1 = " + std::to_string(N + 1) +
                 ": an odd number of transpositions cannot multiply to the identity",
             true);
        step("sum c_j = sum a_i = 2k <= 2(N+1) = " + std::to_string(bound), true);
        const long pigeon = 3 * (N - 1) + 2;
        step("at most one c_j = 2 would force sum c_j >= 3(N-1)+2 = " +
                 std::to_string(pigeon) + " > " + std::to_string(bound) +
                 ", so at least two c_j equal 2",
             pigeon > bound);
        step("two disjoint length-2 trajectories force a-counts of at least "
             "(4,2,3,3)-type on four indices: a_1+a_2+a_3+a_4 >= 12",
             true);
        tr.final_lhs = 12 + 2 * (N - 4);
        tr.final_rhs = bound;
        step("12 + 2(N-4) = " + std::to_string(tr.final_lhs) +
                 " <= sum a_i <= " + std::to_string(tr.final_rhs) +
                 " is required but " + std::to_string(tr.final_lhs) + " > " +
                 std::to_string(tr.final_rhs),
             false);
    } else {
        const long bound = 2 * (N + 2);
        step("k is even and k <= N+2 = " + std::to_string(N + 2) + " slots", true);
        step("sum c_j = sum a_i = 2k <= 2(N+2) = " + std::to_string(bound), true);
        const long pigeon = 3 * (N - 2) + 4;
        step("at most two c_j = 2 would force sum c_j >= 3(N-2)+4 = " +
                 std::to_string(pigeon) + " > " + std::to_string(bound) +
                 ", so at least three c_j equal 2",
             pigeon > bound);
        step("three disjoint length-2 trajectories force 18 <= sum of a over "
             "their six indices",
             true);
        tr.final_lhs = 18 + 2 * (N - 6);
        tr.final_rhs = bound;
        step("18 + 2(N-6) = " + std::to_string(tr.final_lhs) +
                 " <= sum a_i <= " + std::to_string(tr.final_rhs) +
                 " is required but " + std::to_string(tr.final_lhs) + " > " +
                 std::to_string(tr.final_rhs),
             false);
    }
    for (const auto& s : tr.steps)
        if (&s != &tr.steps.back() && !s.holds) return tr;  // broken chain
    tr.contradiction = tr.final_lhs > tr.final_rhs;
    return tr;
}

struct LemmaVerdict {
    unsigned long n = 0;
    bool no_configurations = false;
    std::vector<ShadowConfig> witnesses;
    std::optional<CountingTrace> trace;
    std::optional<SearchReport> search;
    std::string route;
};

inline LemmaVerdict verify_lemma(unsigned long n,
                                 const ShadowConstraints& constraints = {}) {
    if (n < 2) throw std::invalid_argument("verify_lemma: needs n >= 2");
    LemmaVerdict v;
    v.n = n;
    if (n < 5) {
        v.search = shadow_search(n, constraints);
        v.witnesses = v.search->configs;
        v.no_configurations = v.search->certified_empty();
        v.route = "search";
        return v;
    }
    if (n == 5) {
        v.trace = counting_check(n);
        v.search = shadow_search(n, constraints);
        v.witnesses = v.search->configs;
        v.no_configurations =
            v.trace->contradiction && v.search->certified_empty();
        v.route = "counting+search";
        return v;
    }
    if (n == 6) {
        v.search = shadow_search(n, constraints);
        v.witnesses = v.search->configs;
        v.no_configurations = v.search->certified_empty();
        v.route = "search";
        return v;
    }
    v.trace = counting_check(n);
    v.no_configurations = v.trace->contradiction;
    v.route = "counting";
    return v;
}

}  // namespace cym
