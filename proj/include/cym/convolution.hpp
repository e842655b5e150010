#pragma once

#include "cym/spectrum.hpp"
#include "cym/tuple.hpp"

namespace cym {

struct MCResult {
    MonodromyTuple output;
    unsigned long dim_k = 0;   // pieces killed blockwise
    unsigned long dim_l = 0;   // common fixed vectors
    unsigned long input_rank = 0;
    unsigned long input_points = 0;
    RootOfUnity lambda;
};

// Convolution with the rank-one twist lambda.  The model lives on p = n - 1
// blocks of the input rank; B_k is the identity outside block row k, which is
//   [ lambda (A_1 - I), ..., lambda (A_{k-1} - I), lambda A_k,
//     (A_{k+1} - I), ..., (A_p - I) ].
// The output is the action on the quotient by K + L, where K stacks the fixed
// blocks ker(A_k - I) and L is the common fixed space of all B_k.  Quotient
// coordinates are the non-pivot columns of the reduced echelon form of the
// span, so the construction is deterministic.  The matrix at infinity is
// always recomputed as the inverse of the product of the finite ones.
inline MCResult middle_convolution(const MonodromyTuple& t, const RootOfUnity& chi) {
    if (chi.is_one())
        throw std::invalid_argument("middle_convolution: twist must differ from 1");
    const Cyclotomic lambda = chi.value();
    TupleCheck check = validate_tuple(t);
    if (!check.ok())
        throw std::invalid_argument("middle_convolution: " + check.violations.front());
    if (t.points() < 2)
        throw std::invalid_argument("middle_convolution: need at least one finite point");

    const unsigned long p = t.points() - 1;
    const unsigned long r = t.rank;
    const unsigned long dim = p * r;
    const Matrix small_id = Matrix::identity(r);

    std::vector<Matrix> big;
    big.reserve(p);
    for (unsigned long k = 0; k < p; ++k) {
        Matrix b = Matrix::identity(dim);
        for (unsigned long j = 0; j < p; ++j) {
            Matrix cell = (j == k) ? lambda * t.mats[k]
                                   : (j < k ? lambda * (t.mats[j] - small_id)
                                            : t.mats[j] - small_id);
            for (unsigned long a = 0; a < r; ++a)
                for (unsigned long bcol = 0; bcol < r; ++bcol)
                    b(k * r + a, j * r + bcol) = cell(a, bcol);
        }
        big.push_back(std::move(b));
    }

    MCResult result;
    result.input_rank = r;
    result.input_points = t.points();
    result.lambda = chi;

    std::vector<std::vector<Cyclotomic>> span;
    for (unsigned long k = 0; k < p; ++k) {
        for (auto& v : kernel_basis(t.mats[k] - small_id)) {
            std::vector<Cyclotomic> row(dim);
            for (unsigned long a = 0; a < r; ++a) row[k * r + a] = v[a];
            span.push_back(std::move(row));
            ++result.dim_k;
        }
    }
    Matrix stacked(p * dim, dim);
    for (unsigned long k = 0; k < p; ++k)
        for (unsigned long i = 0; i < dim; ++i)
            for (unsigned long j = 0; j < dim; ++j)
                stacked(k * dim + i, j) =
                    (i == j) ? big[k](i, j) - Cyclotomic(1) : big[k](i, j);
    for (auto& v : kernel_basis(stacked)) {
        span.push_back(std::move(v));
        ++result.dim_l;
    }

    std::vector<unsigned long> free_cols;
    ReducedEchelon re{Matrix(0, 0), {}, 0};
    if (!span.empty()) {
        Matrix sp(span.size(), dim);
        for (std::size_t i = 0; i < span.size(); ++i)
            for (unsigned long j = 0; j < dim; ++j) sp(i, j) = span[i][j];
        re = reduced_echelon(sp);
    }
    {
        std::size_t next = 0;
        for (unsigned long j = 0; j < dim; ++j) {
            if (next < re.pivot_cols.size() && re.pivot_cols[next] == j)
                ++next;
            else
                free_cols.push_back(j);
        }
    }
    const unsigned long q = static_cast<unsigned long>(free_cols.size());
    if (q == 0) throw std::domain_error("middle_convolution: quotient is zero-dimensional");

    auto reduce = [&](std::vector<Cyclotomic>& v) {
        for (std::size_t i = 0; i < re.pivot_cols.size(); ++i) {
            const Cyclotomic c = v[re.pivot_cols[i]];
            if (c.is_zero()) continue;
            for (unsigned long j = 0; j < dim; ++j)
                if (!re.m(i, j).is_zero()) v[j] = v[j] - c * re.m(i, j);
        }
    };

    result.output.rank = q;
    Matrix prod = Matrix::identity(q);
    for (unsigned long k = 0; k < p; ++k) {
        Matrix out(q, q);
        for (unsigned long fc = 0; fc < q; ++fc) {
            std::vector<Cyclotomic> col(dim);
            for (unsigned long i = 0; i < dim; ++i) col[i] = big[k](i, free_cols[fc]);
            reduce(col);
            for (unsigned long fr = 0; fr < q; ++fr) out(fr, fc) = col[free_cols[fr]];
        }
        prod = prod * out;
        result.output.mats.push_back(std::move(out));
    }
    result.output.mats.push_back(inverse(prod));
    return result;
}

// Blockwise prediction of the output local shapes.  Finite points send
// J(b, l) to J(b lambda, l') with l' = l - 1 if b = 1, l + 1 if b lambda = 1,
// else l, dropping empty blocks and padding with J(1, 1); at infinity the
// twist acts by lambda^{-1}, the special cases swap, and padding uses
// J(lambda^{-1}, 1).
inline std::vector<JordanData> predict_local_monodromy(const std::vector<JordanData>& in,
                                                       const RootOfUnity& lambda,
                                                       unsigned long output_rank) {
    if (lambda.is_one())
        throw std::invalid_argument("predict_local_monodromy: twist must differ from 1");
    const RootOfUnity lambda_inv = lambda.inverse();
    std::vector<JordanData> out;
    for (std::size_t idx = 0; idx < in.size(); ++idx) {
        const bool at_infinity = (idx + 1 == in.size());
        const RootOfUnity mult = at_infinity ? lambda_inv : lambda;
        const RootOfUnity shrink = at_infinity ? lambda : RootOfUnity::one();
        const RootOfUnity grow = at_infinity ? RootOfUnity::one() : lambda_inv;
        JordanData d;
        d.ambient_rank = output_rank;
        unsigned long used = 0;
        for (const auto& block : in[idx].blocks) {
            unsigned long len = block.size;
            if (block.eigenvalue == shrink)
                --len;
            else if (block.eigenvalue == grow)
                ++len;
            if (len == 0) continue;
            d.blocks.push_back(JordanBlock{block.eigenvalue * mult, len});
            used += len;
        }
        const RootOfUnity pad = at_infinity ? lambda_inv : RootOfUnity::one();
        while (used < output_rank) {
            d.blocks.push_back(JordanBlock{pad, 1});
            ++used;
        }
        std::sort(d.blocks.begin(), d.blocks.end());
        out.push_back(std::move(d));
    }
    return out;
}

struct LocalRuleReport {
    std::vector<JordanData> predicted;
    std::vector<JordanData> observed;
    std::vector<bool> matches;  // per point, infinity last
    bool all = false;
};

inline LocalRuleReport verify_mc_local_rules(const MonodromyTuple& t, const RootOfUnity& lambda,
                                             unsigned long order_bound = 240) {
    MCResult mc = middle_convolution(t, lambda);
    std::vector<JordanData> in;
    for (const auto& m : t.mats) in.push_back(jordan_data(m, order_bound));
    LocalRuleReport report;
    report.predicted = predict_local_monodromy(in, lambda, mc.output.rank);
    for (const auto& m : mc.output.mats)
        report.observed.push_back(jordan_data(m, order_bound));
    report.all = true;
    for (std::size_t i = 0; i < report.predicted.size(); ++i) {
        const bool same = report.predicted[i] == report.observed[i];
        report.matches.push_back(same);
        report.all = report.all && same;
    }
    return report;
}

}  // namespace cym
