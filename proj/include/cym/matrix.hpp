#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cym/cyclotomic.hpp"
#include "cym/expr.hpp"

namespace cym {

// Dense matrix over the union of cyclotomic fields, row-major.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(unsigned long rows, unsigned long cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(unsigned long n) {
        Matrix m(n, n);
        for (unsigned long i = 0; i < n; ++i) m(i, i) = Cyclotomic(1);
        return m;
    }
    static Matrix scalar(unsigned long n, const Cyclotomic& v) {
        Matrix m(n, n);
        for (unsigned long i = 0; i < n; ++i) m(i, i) = v;
        return m;
    }

    unsigned long rows() const { return rows_; }
    unsigned long cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Cyclotomic& operator()(unsigned long i, unsigned long j) {
        return a_[i * cols_ + j];
    }
    const Cyclotomic& operator()(unsigned long i, unsigned long j) const {
        return a_[i * cols_ + j];
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        x.check_same_shape(y);
        Matrix r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        x.check_same_shape(y);
        Matrix r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
        return r;
    }
    Matrix operator-() const {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_)
            throw std::invalid_argument("matrix: inner dimensions differ");
        Matrix r(x.rows_, y.cols_);
        for (unsigned long i = 0; i < x.rows_; ++i)
            for (unsigned long k = 0; k < x.cols_; ++k) {
                const Cyclotomic& v = x(i, k);
                if (v.is_zero()) continue;
                for (unsigned long j = 0; j < y.cols_; ++j) {
                    const Cyclotomic& w = y(k, j);
                    if (w.is_zero()) continue;
                    r(i, j) = r(i, j) + v * w;
                }
            }
        return r;
    }
    friend Matrix operator*(const Cyclotomic& s, const Matrix& x) {
        Matrix r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = s * x.a_[i];
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (unsigned long i = 0; i < rows_; ++i)
            for (unsigned long j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }
    Matrix conj_transpose() const {
        Matrix r(cols_, rows_);
        for (unsigned long i = 0; i < rows_; ++i)
            for (unsigned long j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j).conj();
        return r;
    }
    Matrix galois(unsigned long k) const {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].galois(k);
        return r;
    }

    Cyclotomic trace() const {
        if (!is_square()) throw std::invalid_argument("matrix: trace of non-square");
        Cyclotomic t;
        for (unsigned long i = 0; i < rows_; ++i) t = t + (*this)(i, i);
        return t;
    }

    bool is_identity() const {
        if (!is_square()) return false;
        for (unsigned long i = 0; i < rows_; ++i)
            for (unsigned long j = 0; j < cols_; ++j)
                if ((*this)(i, j) != Cyclotomic(i == j ? 1 : 0)) return false;
        return true;
    }
    bool is_scalar() const {
        if (!is_square() || rows_ == 0) return false;
        const Cyclotomic& d = (*this)(0, 0);
        for (unsigned long i = 0; i < rows_; ++i)
            for (unsigned long j = 0; j < cols_; ++j) {
                if (i == j ? ((*this)(i, j) != d) : !(*this)(i, j).is_zero())
                    return false;
            }
        return true;
    }
    bool is_zero() const {
        for (const auto& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }

    // smallest common conductor of all entries
    unsigned long conductor() const {
        unsigned long m = 1;
        for (const auto& v : a_) m = lcm_ul(m, v.conductor());
        return normalize_conductor(m);
    }

    // deterministic text key, e.g. for closure sets; m must be a multiple of
    // every entry conductor
    std::string key_at(unsigned long m) const {
        std::string s;
        s.reserve(a_.size() * 4);
        for (const auto& v : a_) {
            s += format_at(v, m);
            s += ';';
        }
        return s;
    }

    Matrix pow(long e) const;  // defined in linalg.hpp (needs inverse)

  private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix: shape mismatch");
    }

    unsigned long rows_, cols_;
    std::vector<Cyclotomic> a_;
};

inline std::vector<Cyclotomic> apply(const Matrix& a, const std::vector<Cyclotomic>& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("apply: size mismatch");
    std::vector<Cyclotomic> out(a.rows());
    for (unsigned long i = 0; i < a.rows(); ++i)
        for (unsigned long j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero() && !v[j].is_zero()) out[i] = out[i] + a(i, j) * v[j];
    return out;
}

// Size proxy for pivot selection: total limb footprint of the coefficients.
inline std::size_t entry_weight(const Cyclotomic& x) {
    std::size_t w = 1;
    for (const auto& c : x.coefficients())
        if (c != 0) w += rational_weight(c);
    return w;
}

}  // namespace cym
