#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "convball/errors.hpp"
#include "convball/real.hpp"

// Small dense vectors/matrices templated over the real backend, plus LU with
// partial pivoting.  Jacobians here are at most a few dozen rows; nothing is
// blocked or parallel.

namespace convball {

template <class Real>
using Vector = std::vector<Real>;

template <class Real>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Real(0.0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Real(1.0);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Real& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Real& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Real> a_;
};

template <class Real>
Real sup_norm(const Vector<Real>& v) {
    using std::abs;
    Real m(0.0);
    for (const Real& x : v) {
        Real a = abs(x);
        if (a > m) m = a;
    }
    return m;
}

template <class Real>
Real sup_dist(const Vector<Real>& a, const Vector<Real>& b) {
    using std::abs;
    Real m(0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        Real d = abs(a[i] - b[i]);
        if (d > m) m = d;
    }
    return m;
}

/// Induced sup-norm: max absolute row sum.
template <class Real>
Real row_sum_norm(const Matrix<Real>& m) {
    using std::abs;
    Real best(0.0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Real s(0.0);
        for (std::size_t j = 0; j < m.cols(); ++j) s += abs(m(i, j));
        if (s > best) best = s;
    }
    return best;
}

template <class Real>
Vector<Real> vec_sub(const Vector<Real>& a, const Vector<Real>& b) {
    Vector<Real> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

template <class Real>
Vector<Real> vec_add(const Vector<Real>& a, const Vector<Real>& b) {
    Vector<Real> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

template <class Real>
Vector<Real> vec_scale(const Real& s, const Vector<Real>& a) {
    Vector<Real> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

/// LU factorization with partial pivoting.  A pivot is declared singular when
/// its magnitude falls below 1e3 * eps * (max magnitude of the pivot row in
/// the original matrix).  Explicit inverses are never formed; reuse one
/// factorization for every solve against the same Jacobian.
template <class Real>
class LuFactor {
public:
    explicit LuFactor(Matrix<Real> m, const std::string& context = "matrix")
        : lu_(std::move(m)), piv_(lu_.rows()) {
        using std::abs;
        const std::size_t n = lu_.rows();
        if (n != lu_.cols()) throw DomainError("LU factorization requires a square matrix");

        std::vector<Real> row_max(n, Real(0.0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Real a = abs(lu_(i, j));
                if (a > row_max[i]) row_max[i] = a;
            }
        }

        const Real thousand(1000.0);
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t p = k;
            Real best = abs(lu_(k, k));
            for (std::size_t i = k + 1; i < n; ++i) {
                Real a = abs(lu_(i, k));
                if (a > best) {
                    best = a;
                    p = i;
                }
            }
            Real threshold = thousand * eps_of(best) * row_max[p];
            if (!(best > threshold))
                throw SingularJacobianError("singular pivot in " + context + " at column " +
                                            std::to_string(k));
            if (p != k) {
                for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(p, j));
                std::swap(row_max[k], row_max[p]);
            }
            piv_[k] = p;
            for (std::size_t i = k + 1; i < n; ++i) {
                Real f = lu_(i, k) / lu_(k, k);
                lu_(i, k) = f;
                for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= f * lu_(k, j);
            }
        }
    }

    Vector<Real> solve(Vector<Real> b) const {
        const std::size_t n = lu_.rows();
        for (std::size_t k = 0; k < n; ++k)
            if (piv_[k] != k) std::swap(b[k], b[piv_[k]]);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) b[i] -= lu_(i, j) * b[j];
        for (std::size_t i = n; i-- > 0;) {
            for (std::size_t j = i + 1; j < n; ++j) b[i] -= lu_(i, j) * b[j];
            b[i] = b[i] / lu_(i, i);
        }
        return b;
    }

private:
    Matrix<Real> lu_;
    std::vector<std::size_t> piv_;
};

}  // namespace convball
