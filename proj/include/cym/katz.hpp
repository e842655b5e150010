#pragma once

// Reduction pipeline for rank-2 quasi-unipotent tuples: strip scalar
// punctures, twist one local eigenvalue to 1 at every finite point, relabel
// so infinity is not unipotent, then contract with the middle convolution at
// a chosen infinity eigenvalue.  Each step records enough data to be undone,
// and invert_katz plays the whole run backwards.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cym/closure.hpp"
#include "cym/convolution.hpp"
#include "cym/spectrum.hpp"
#include "cym/standard_groups.hpp"
#include "cym/tuple.hpp"

namespace cym {

// How to pick one eigenvalue per puncture.  The default prefers low order and
// therefore takes 1 whenever it is present; Indexed wants one index per
// puncture (infinity last) into the sorted list of distinct eigenvalues, with
// the infinity index counting only the eigenvalues different from 1.
struct EigenvaluePolicy {
    enum class Mode { SmallestOrder, LargestOrder, Indexed };
    Mode mode = Mode::SmallestOrder;
    std::vector<unsigned long> indices;

    static EigenvaluePolicy smallest() { return {}; }
    static EigenvaluePolicy largest() {
        EigenvaluePolicy p;
        p.mode = Mode::LargestOrder;
        return p;
    }
    static EigenvaluePolicy indexed(std::vector<unsigned long> idx) {
        EigenvaluePolicy p;
        p.mode = Mode::Indexed;
        p.indices = std::move(idx);
        return p;
    }
};

struct TwistStep {
    RankOneTwist factors;
    MonodromyTuple result;
};

struct RotationStep {
    unsigned long offset = 0;  // cyclic shift applied to the point labels
    MonodromyTuple result;
};

namespace detail {

inline std::vector<RootOfUnity> distinct_eigenvalues(const Matrix& a,
                                                     unsigned long order_bound,
                                                     const char* who) {
    const SpectrumResult s = root_of_unity_spectrum(a, order_bound);
    if (!s.quasi_unipotent)
        throw NotQuasiUnipotentError(std::string(who) +
                                     ": eigenvalues are not roots of unity");
    std::vector<RootOfUnity> out;
    for (const auto& e : s.eigenvalues)
        if (out.empty() || !(out.back() == e)) out.push_back(e);
    return out;
}

inline bool is_unipotent(const Matrix& a, unsigned long order_bound) {
    const SpectrumResult s = root_of_unity_spectrum(a, order_bound);
    if (!s.quasi_unipotent) return false;
    for (const auto& e : s.eigenvalues)
        if (!e.is_one()) return false;
    return true;
}

inline RootOfUnity pick(const std::vector<RootOfUnity>& sorted,
                        const EigenvaluePolicy& policy, unsigned long slot) {
    switch (policy.mode) {
        case EigenvaluePolicy::Mode::SmallestOrder:
            return sorted.front();
        case EigenvaluePolicy::Mode::LargestOrder:
            return sorted.back();
        case EigenvaluePolicy::Mode::Indexed:
            if (slot >= policy.indices.size())
                throw std::invalid_argument("eigenvalue policy: missing index");
            if (policy.indices[slot] >= sorted.size())
                throw std::invalid_argument("eigenvalue policy: index out of range");
            return sorted[policy.indices[slot]];
    }
    throw std::logic_error("eigenvalue policy: bad mode");
}

}  // namespace detail

// Twist scalar finite punctures to the identity.  The infinity slot absorbs
// the compensating factor, so a scalar at infinity other than the identity
// cannot be handled without reshuffling eigenvalue content onto some finite
// point, and is rejected.
inline TwistStep kill_scalar_monodromy(const MonodromyTuple& t,
                                       unsigned long order_bound = 240) {
    const unsigned long n = t.points();
    if (n < 2) throw std::invalid_argument("kill_scalar_monodromy: too few points");
    const Matrix& inf = t.at_infinity();
    if (inf.is_scalar() && !inf.is_identity())
        throw std::domain_error(
            "kill_scalar_monodromy: scalar monodromy at infinity");
    TwistStep step;
    step.factors.scalars.assign(n, Cyclotomic(1));
    Cyclotomic carried(1);
    for (unsigned long k = 0; k + 1 < n; ++k) {
        const Matrix& a = t.mats[k];
        if (!a.is_scalar() || a.is_identity()) continue;
        const Cyclotomic c = a(0, 0);
        const auto r = is_root_of_unity(c);
        if (!r)
            throw NotQuasiUnipotentError(
                "kill_scalar_monodromy: scalar is not a root of unity");
        (void)order_bound;
        step.factors.scalars[k] = c.inverse();
        carried = carried * c;
    }
    step.factors.scalars[n - 1] = carried;
    step.result = twist(t, step.factors);
    return step;
}

// Twist every finite puncture so that 1 appears in its spectrum, choosing
// which eigenvalue moves there according to the policy.  Infinity again
// absorbs the compensation.
inline TwistStep normalize_eigenvalue_one(const MonodromyTuple& t,
                                          const EigenvaluePolicy& policy = {},
                                          unsigned long order_bound = 240) {
    const unsigned long n = t.points();
    if (n < 2)
        throw std::invalid_argument("normalize_eigenvalue_one: too few points");
    if (policy.mode == EigenvaluePolicy::Mode::Indexed &&
        policy.indices.size() != n)
        throw std::invalid_argument(
            "normalize_eigenvalue_one: need one index per puncture");
    TwistStep step;
    step.factors.scalars.assign(n, Cyclotomic(1));
    Cyclotomic carried(1);
    for (unsigned long k = 0; k + 1 < n; ++k) {
        const auto eigs = detail::distinct_eigenvalues(
            t.mats[k], order_bound, "normalize_eigenvalue_one");
        const RootOfUnity chosen = detail::pick(eigs, policy, k);
        if (chosen.is_one()) continue;
        const Cyclotomic c = chosen.value();
        step.factors.scalars[k] = c.inverse();
        carried = carried * c;
    }
    step.factors.scalars[n - 1] = carried;
    step.result = twist(t, step.factors);
    return step;
}

// If infinity carries unipotent monodromy, cyclically relabel the punctures
// so the lowest non-unipotent finite point moves there.  A cyclic shift
// conjugates the defining product relation, so no matrix changes.
inline RotationStep choose_infinity(const MonodromyTuple& t,
                                    unsigned long order_bound = 240) {
    const unsigned long n = t.points();
    if (n < 2) throw std::invalid_argument("choose_infinity: too few points");
    RotationStep step;
    if (!detail::is_unipotent(t.at_infinity(), order_bound)) {
        step.result = t;
        return step;
    }
    unsigned long k = 0;
    for (; k + 1 < n; ++k)
        if (!detail::is_unipotent(t.mats[k], order_bound)) break;
    if (k + 1 == n)
        throw std::domain_error("choose_infinity: every point is unipotent");
    step.offset = k + 1;
    step.result.rank = t.rank;
    step.result.mats.resize(n);
    for (unsigned long i = 0; i < n; ++i)
        step.result.mats[i] = t.mats[(i + step.offset) % n];
    return step;
}

// Pick the contraction parameter among the non-trivial infinity eigenvalues.
inline RootOfUnity choose_chi(const MonodromyTuple& t,
                              const EigenvaluePolicy& policy = {},
                              unsigned long order_bound = 240) {
    const auto eigs = detail::distinct_eigenvalues(t.at_infinity(), order_bound,
                                                   "choose_chi");
    std::vector<RootOfUnity> nontrivial;
    for (const auto& e : eigs)
        if (!e.is_one()) nontrivial.push_back(e);
    if (nontrivial.empty())
        throw std::domain_error("choose_chi: infinity is unipotent");
    return detail::pick(nontrivial, policy, t.points() - 1);
}

struct KatzRun {
    MonodromyTuple input;
    TwistStep scalar_kill;
    TwistStep eigenvalue_shift;
    RotationStep rotation;
    RootOfUnity nu;
    MonodromyTuple normalized;  // rotation.result, the tuple the contraction saw
    MCResult forward;
};

inline KatzRun run_katz(const MonodromyTuple& t,
                        const EigenvaluePolicy& policy = {},
                        unsigned long order_bound = 240) {
    if (t.rank != 2) throw std::invalid_argument("run_katz: rank must be 2");
    if (!validate_tuple(t).ok())
        throw std::invalid_argument("run_katz: malformed tuple");
    if (!is_irreducible(t)) throw std::invalid_argument("run_katz: reducible tuple");
    KatzRun run;
    run.input = t;
    run.scalar_kill = kill_scalar_monodromy(t, order_bound);
    run.eigenvalue_shift =
        normalize_eigenvalue_one(run.scalar_kill.result, policy, order_bound);
    run.rotation = choose_infinity(run.eigenvalue_shift.result, order_bound);
    run.normalized = run.rotation.result;
    run.nu = choose_chi(run.normalized, policy, order_bound);
    run.forward = middle_convolution(run.normalized, run.nu);
    return run;
}

// Contract with the inverse parameter, undo the relabeling, then undo both
// twists.  The result is isomorphic to the original input, so trace data is
// restored exactly.
inline MonodromyTuple invert_katz(const KatzRun& run) {
    const MCResult back = middle_convolution(run.forward.output, run.nu.inverse());
    const unsigned long n = back.output.points();
    MonodromyTuple unrot;
    unrot.rank = back.output.rank;
    unrot.mats.resize(n);
    for (unsigned long i = 0; i < n; ++i)
        unrot.mats[i] = back.output.mats[(i + n - run.rotation.offset) % n];
    const MonodromyTuple shifted =
        twist(unrot, inverse_twist(run.eigenvalue_shift.factors));
    return twist(shifted, inverse_twist(run.scalar_kill.factors));
}

struct PointReport {
    JordanData jordan;
    bool identity = false;
    bool pseudoreflection = false;
};

struct InfinitySplit {
    bool found = false;
    RootOfUnity mu;
    bool matches_nu_inverse = false;
    JordanData jordan;
};

struct KatzAnalysis {
    std::vector<PointReport> finite;
    InfinitySplit infinity;
    unsigned long nontrivial_points = 0;  // punctures with non-identity monodromy
    bool rank_law = false;                // output rank + 2 == nontrivial punctures
    bool closure_completed = false;
    unsigned long closure_order = 0;
    std::optional<ReflectionGroupId> identification;
};

inline KatzAnalysis analyze_output(const KatzRun& run,
                                   unsigned long closure_cap = 5000,
                                   unsigned long order_bound = 240) {
    const MonodromyTuple& u = run.forward.output;
    KatzAnalysis a;
    for (unsigned long k = 0; k + 1 < u.points(); ++k) {
        PointReport r;
        r.jordan = jordan_data(u.mats[k], order_bound);
        r.identity = u.mats[k].is_identity();
        r.pseudoreflection = is_pseudoreflection(u.mats[k]);
        if (!r.identity) ++a.nontrivial_points;
        a.finite.push_back(std::move(r));
    }
    const Matrix& inf = u.at_infinity();
    if (!inf.is_identity()) ++a.nontrivial_points;
    a.infinity.jordan = jordan_data(inf, order_bound);
    if (const auto split = scalar_pseudoreflection_split(inf, order_bound)) {
        a.infinity.found = true;
        a.infinity.mu = split->first;
        a.infinity.matches_nu_inverse = (split->first == run.nu.inverse());
    }
    a.rank_law = (u.rank + 2 == a.nontrivial_points);
    GroupClosure c = closure(u.mats, closure_cap);
    a.closure_completed = c.completed;
    if (c.completed) {
        a.closure_order = c.order();
        a.identification = recognize(c, u.mats);
    }
    return a;
}

}  // namespace cym
