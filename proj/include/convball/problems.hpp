#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>

#include "convball/errors.hpp"
#include "convball/linalg.hpp"
#include "convball/operator_spec.hpp"
#include "convball/quadrature.hpp"
#include "convball/real.hpp"

// The three benchmark operators and the empirical continuity-constant
// estimator.

namespace convball {

namespace detail {

// Signed fractional powers: the C^1 odd extension of t^(5/2) and the matching
// derivative factor |t|^(3/2), so transient negative iterates stay evaluable.
template <class Real>
Real pow52(const Real& t) {
    using std::abs;
    using std::pow;
    const Real a = pow(abs(t), Real(2.5));
    return t < Real(0.0) ? -a : a;
}

template <class Real>
Real pow32(const Real& t) {
    using std::abs;
    using std::pow;
    return pow(abs(t), Real(1.5));
}

}  // namespace detail

/// f(x) = x^3 log(x^2) + x^5 - x^4 (f(0) = 0) on [-1/2, 5/2]; root x* = 1.
/// f'(x) = 3x^2 log(x^2) + 5x^4 - 4x^3 + 2x^2, with f'(0) = 0 by continuity.
/// f''' is unbounded on the domain, which is what makes this a benchmark for
/// first-derivative-only convergence theory.
template <class Real>
OperatorSpec<Real> logpoly_problem() {
    OperatorSpec<Real> op;
    op.dimension = 1;
    op.evaluate = [](const Vector<Real>& v) -> Vector<Real> {
        using std::abs;
        using std::log;
        const Real& x = v[0];
        if (x == Real(0.0)) return {Real(0.0)};
        const Real x2 = x * x;
        const Real x3 = x2 * x;
        // log(x^2) as 2*log|x| to dodge underflow of x^2 near 0
        return {x3 * (Real(2.0) * log(abs(x))) + x3 * x2 - x2 * x2};
    };
    op.jacobian = [](const Vector<Real>& v) -> Matrix<Real> {
        using std::abs;
        using std::log;
        const Real& x = v[0];
        Matrix<Real> j(1, 1);
        if (x == Real(0.0)) return j;
        const Real x2 = x * x;
        j(0, 0) = Real(3.0) * x2 * (Real(2.0) * log(abs(x))) + Real(5.0) * x2 * x2 -
                  Real(4.0) * x2 * x + Real(2.0) * x2;
        return j;
    };
    op.known_root = Vector<Real>{Real(1.0)};
    op.domain = Ball<Real>::around({Real(1.0)}, Real(1.5));
    return op;
}

/// f(x) = e^{-x} - 1 + x/5, the Planck radiation-law maximum; the root near
/// 4.965114 is refined to the backend's full precision at construction.
template <class Real>
OperatorSpec<Real> planck_problem() {
    OperatorSpec<Real> op;
    op.dimension = 1;
    op.evaluate = [](const Vector<Real>& v) -> Vector<Real> {
        using std::exp;
        return {exp(-v[0]) - Real(1.0) + v[0] / Real(5.0)};
    };
    op.jacobian = [](const Vector<Real>& v) -> Matrix<Real> {
        using std::exp;
        Matrix<Real> j(1, 1);
        j(0, 0) = -exp(-v[0]) + Real(1.0) / Real(5.0);
        return j;
    };
    using std::abs;
    Real x = real_from_literal<Real>("4.965114");
    for (int k = 0; k < 64; ++k) {
        const Real step = op.evaluate({x})[0] / op.jacobian({x})(0, 0);
        x = x - step;
        if (abs(step) <= Real(4.0) * eps_of(x) * abs(x)) break;
    }
    op.known_root = Vector<Real>{x};
    return op;
}

/// Green's-function kernel of the two-point boundary operator on [0,1]:
/// G(s,t) = (1-s)t for t <= s, s(1-t) for s <= t.  Symmetric, zero on the
/// boundary, with sup_s integral bounded by 1/8.
inline double green_kernel(double s, double t) {
    if (!(s >= 0.0 && s <= 1.0 && t >= 0.0 && t <= 1.0))
        throw DomainError("green_kernel arguments must lie in [0,1]");
    return t <= s ? (1.0 - s) * t : s * (1.0 - t);
}

/// Nystrom discretization of the Hammerstein equation
///   T(x)(s) = x(s) - int_0^1 G(s,t) (x(t)^{5/2} + x(t)^2/2) dt
/// on the rule's nodes: F(x)_i = x_i - sum_j w_j G(s_i,s_j)(pow52(x_j)+x_j^2/2).
/// The discrete root is the zero vector for every n.
template <class Real>
OperatorSpec<Real> hammerstein_problem(int n, const QuadratureRule& rule) {
    if (n < 2) throw DomainError("hammerstein_problem: n must be >= 2");
    if (static_cast<int>(rule.nodes.size()) != n ||
        static_cast<int>(rule.weights.size()) != n)
        throw DomainError("hammerstein_problem: rule size does not match n");

    const std::size_t dim = static_cast<std::size_t>(n);
    Matrix<Real> kernel(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            kernel(i, j) = Real(rule.weights[j] * green_kernel(rule.nodes[i], rule.nodes[j]));

    OperatorSpec<Real> op;
    op.dimension = dim;
    op.evaluate = [kernel, dim](const Vector<Real>& x) -> Vector<Real> {
        Vector<Real> g(dim);
        for (std::size_t j = 0; j < dim; ++j)
            g[j] = detail::pow52(x[j]) + x[j] * x[j] / Real(2.0);
        Vector<Real> f(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            Real acc(0.0);
            for (std::size_t j = 0; j < dim; ++j) acc += kernel(i, j) * g[j];
            f[i] = x[i] - acc;
        }
        return f;
    };
    op.jacobian = [kernel, dim](const Vector<Real>& x) -> Matrix<Real> {
        Vector<Real> dg(dim);
        for (std::size_t j = 0; j < dim; ++j)
            dg[j] = Real(2.5) * detail::pow32(x[j]) + x[j];
        Matrix<Real> jac = Matrix<Real>::identity(dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) jac(i, j) -= kernel(i, j) * dg[j];
        return jac;
    };
    op.known_root = Vector<Real>(dim, Real(0.0));
    op.domain = Ball<Real>::around(Vector<Real>(dim, Real(0.0)), Real(1.0));
    return op;
}

/// Empirical continuity constants: sampled lower bounds of the suprema in
///   ||[T'(x*)]^-1 (T'(x)-T'(y))|| <= kappa ||x-y||^q      (full)
///   ||[T'(x*)]^-1 (T'(x)-T'(x*))|| <= kappa0 ||x-x*||^q   (center)
/// over the sup-norm ball of the given radius around x*.
struct ConstantEstimate {
    double kappa0_hat = 0.0;
    double kappa_hat = 0.0;
    double q = 1.0;
    int samples = 0;
    double ball_radius = 0.0;
};

/// Draws `samples` uniform pairs in the ball (deterministic for a fixed seed;
/// sample s of a longer run reuses sample s of a shorter one, so estimates
/// never decrease with more samples).  Center pairs feed the full-constant
/// maximum too, keeping kappa0_hat <= kappa_hat by construction.  Matrix norms
/// are induced sup-norms (max absolute row sum).
inline ConstantEstimate estimate_constants(const OperatorSpec<double>& op, double q,
                                           double ball_radius, int samples,
                                           std::uint64_t seed) {
    if (!op.known_root) throw DomainError("estimate_constants requires a known root");
    if (!(q > 0.0 && q <= 1.0)) throw DomainError("q must lie in (0,1]");
    if (!(ball_radius > 0.0)) throw DomainError("ball_radius must be positive");
    if (samples < 1) throw DomainError("samples must be >= 1");

    const Vector<double>& root = *op.known_root;
    const std::size_t dim = op.dimension;
    const Matrix<double> jstar = op.jacobian(root);
    LuFactor<double> lu(jstar, "T'(x*)");

    std::mt19937_64 rng(seed);
    auto unit = [&rng]() {  // uniform in [-1,1), reproducible across platforms
        return 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
    };
    auto draw = [&]() {
        Vector<double> x(dim);
        for (std::size_t i = 0; i < dim; ++i) x[i] = root[i] + ball_radius * unit();
        return x;
    };
    // ||J*^-1 (J(u) - J(v))|| / ||u - v||^q, or 0 when the points coincide
    auto ratio = [&](const Vector<double>& u, const Matrix<double>& ju,
                     const Vector<double>& v, const Matrix<double>& jv) {
        const double d = sup_dist(u, v);
        if (!(d > 0.0)) return 0.0;
        Matrix<double> a(dim, dim);
        Vector<double> col(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            for (std::size_t i = 0; i < dim; ++i) col[i] = ju(i, j) - jv(i, j);
            const Vector<double> s = lu.solve(col);
            for (std::size_t i = 0; i < dim; ++i) a(i, j) = s[i];
        }
        return row_sum_norm(a) / (q == 1.0 ? d : std::pow(d, q));
    };

    ConstantEstimate est;
    est.q = q;
    est.samples = samples;
    est.ball_radius = ball_radius;
    for (int s = 0; s < samples; ++s) {
        const Vector<double> x = draw();
        const Vector<double> y = draw();
        const Matrix<double> jx = op.jacobian(x);
        const Matrix<double> jy = op.jacobian(y);
        const double full = ratio(x, jx, y, jy);
        const double center = ratio(x, jx, root, jstar);
        if (full > est.kappa_hat) est.kappa_hat = full;
        if (center > est.kappa0_hat) est.kappa0_hat = center;
        if (center > est.kappa_hat) est.kappa_hat = center;
    }
    return est;
}

}  // namespace convball
