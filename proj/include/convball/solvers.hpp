#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "convball/continuity.hpp"
#include "convball/errors.hpp"
#include "convball/linalg.hpp"
#include "convball/majorant.hpp"
#include "convball/operator_spec.hpp"
#include "convball/root_search.hpp"

// The three iterations under study:
//
//   Newton        x+ = x - [T'(x)]^-1 T(x)
//   FifthOrder    y  = x - 1/2 [T'(x)]^-1 T(x)
//                 z  = x - [T'(y)]^-1 T(x)
//                 x+ = z - (2[T'(y)]^-1 - [T'(x)]^-1) T(z)
//   SeventhOrder  y, z1 as above, then
//                 z2 = z1 - (2[T'(y)]^-1 - [T'(x)]^-1) T(z1)
//                 x+ = z2 - (2[T'(y)]^-1 - [T'(x)]^-1) T(z2)
//
// Per iteration the seventh-order scheme performs exactly two factorizations
// (T'(x), T'(y)) and three operator evaluations (T(x), T(z1), T(z2)); the
// bracketed combinations are solves against the stored factorizations, never
// explicit inverses.

namespace convball {

enum class IterationMethod { Newton, FifthOrder, SeventhOrder };

inline const char* method_name(IterationMethod m) {
    switch (m) {
        case IterationMethod::Newton: return "newton";
        case IterationMethod::FifthOrder: return "fifth";
        case IterationMethod::SeventhOrder: return "seventh";
    }
    return "?";
}

struct SolveConfig {
    double residual_tol = 1e-12;  // sup-norm stopping threshold
    int max_iterations = 100;
    int precision_digits = 16;  // 16 = native double; >16 expects the BigFloat backend

    void validate() const {
        if (!(residual_tol > 0.0)) throw DomainError("residual_tol must be positive");
        if (max_iterations < 1) throw DomainError("max_iterations must be >= 1");
        if (precision_digits < 16) throw DomainError("precision_digits must be >= 16");
    }
};

/// One iteration's record: the iterate it started from, the sub-iterates the
/// method produced (absent where the scheme has none), the sup-norm residual
/// at x, and the error to x* when the problem declares a root.
template <class Real>
struct StepRecord {
    Vector<Real> x;
    std::optional<Vector<Real>> y, z1, z2;
    Real residual_norm{0.0};
    std::optional<Real> error_to_root;
};

template <class Real>
struct IterationTrace {
    IterationMethod method = IterationMethod::Newton;
    std::vector<StepRecord<Real>> steps;
    Vector<Real> final_x;
    Real final_residual{0.0};
    std::optional<Real> final_error;
    bool converged = false;
};

namespace detail {

template <class Real>
void require_in_domain(const OperatorSpec<Real>& op, const Vector<Real>& x,
                       const char* what) {
    if (!op.contains(x))
        throw DomainError(std::string(what) + " left the operator's declared domain");
}

template <class Real>
Vector<Real> newton_update(const OperatorSpec<Real>& op, const Vector<Real>& x,
                           const Vector<Real>& fx) {
    LuFactor<Real> lux(op.jacobian(x), "T'(x_n)");
    return vec_sub(x, lux.solve(fx));
}

template <class Real>
std::pair<Vector<Real>, StepRecord<Real>> fifth_update(const OperatorSpec<Real>& op,
                                                       const Vector<Real>& x,
                                                       const Vector<Real>& fx) {
    StepRecord<Real> rec;
    LuFactor<Real> lux(op.jacobian(x), "T'(x_n)");
    const Vector<Real> newton = lux.solve(fx);
    const Vector<Real> y = vec_sub(x, vec_scale(Real(0.5), newton));
    require_in_domain(op, y, "sub-step y");
    rec.y = y;
    LuFactor<Real> luy(op.jacobian(y), "T'(y_n)");
    const Vector<Real> z = vec_sub(x, luy.solve(fx));
    require_in_domain(op, z, "sub-step z");
    rec.z1 = z;
    const Vector<Real> fz = op.evaluate(z);
    const Vector<Real> corr =
        vec_sub(vec_scale(Real(2.0), luy.solve(fz)), lux.solve(fz));
    return {vec_sub(z, corr), std::move(rec)};
}

template <class Real>
std::pair<Vector<Real>, StepRecord<Real>> seventh_update(const OperatorSpec<Real>& op,
                                                         const Vector<Real>& x,
                                                         const Vector<Real>& fx) {
    StepRecord<Real> rec;
    LuFactor<Real> lux(op.jacobian(x), "T'(x_n)");
    const Vector<Real> newton = lux.solve(fx);
    const Vector<Real> y = vec_sub(x, vec_scale(Real(0.5), newton));
    require_in_domain(op, y, "sub-step y");
    rec.y = y;
    LuFactor<Real> luy(op.jacobian(y), "T'(y_n)");

    auto correct = [&](const Vector<Real>& v, const Vector<Real>& fv) {
        return vec_sub(v, vec_sub(vec_scale(Real(2.0), luy.solve(fv)), lux.solve(fv)));
    };

    const Vector<Real> z1 = vec_sub(x, luy.solve(fx));
    require_in_domain(op, z1, "sub-step z1");
    rec.z1 = z1;
    const Vector<Real> z2 = correct(z1, op.evaluate(z1));
    require_in_domain(op, z2, "sub-step z2");
    rec.z2 = z2;
    return {correct(z2, op.evaluate(z2)), std::move(rec)};
}

}  // namespace detail

/// Single Newton step from x.
template <class Real>
Vector<Real> step_newton(const OperatorSpec<Real>& op, const Vector<Real>& x,
                         const SolveConfig& cfg = {}) {
    cfg.validate();
    detail::require_in_domain(op, x, "x");
    return detail::newton_update(op, x, op.evaluate(x));
}

/// Single fifth-order step (two factorizations, two operator evaluations).
template <class Real>
Vector<Real> step_fifth(const OperatorSpec<Real>& op, const Vector<Real>& x,
                        const SolveConfig& cfg = {}) {
    cfg.validate();
    detail::require_in_domain(op, x, "x");
    return detail::fifth_update(op, x, op.evaluate(x)).first;
}

/// Single seventh-order step (two factorizations, three operator evaluations);
/// also returns the recorded sub-iterates.
template <class Real>
std::pair<Vector<Real>, StepRecord<Real>> step_seventh(const OperatorSpec<Real>& op,
                                                       const Vector<Real>& x,
                                                       const SolveConfig& cfg = {}) {
    cfg.validate();
    detail::require_in_domain(op, x, "x");
    const Vector<Real> fx = op.evaluate(x);
    auto [next, rec] = detail::seventh_update(op, x, fx);
    rec.x = x;
    rec.residual_norm = sup_norm(fx);
    return {std::move(next), std::move(rec)};
}

/// Iterate until the sup-norm residual drops to cfg.residual_tol or
/// max_iterations is hit (trace returned with converged = false in that case).
/// Singular Jacobians and iterates leaving the domain throw.
template <class Real>
IterationTrace<Real> solve(IterationMethod method, const OperatorSpec<Real>& op,
                           const Vector<Real>& x0, const SolveConfig& cfg = {}) {
    cfg.validate();
    if (x0.size() != op.dimension)
        throw DomainError("x0 dimension does not match the operator");
    const Real tol(cfg.residual_tol);

    IterationTrace<Real> trace;
    trace.method = method;
    Vector<Real> x = x0;
    for (int n = 0;; ++n) {
        detail::require_in_domain(op, x, n == 0 ? "x0" : "iterate");
        const Vector<Real> fx = op.evaluate(x);
        const Real r = sup_norm(fx);
        if (r <= tol || n >= cfg.max_iterations) {
            trace.converged = r <= tol;
            trace.final_x = x;
            trace.final_residual = r;
            if (op.known_root) trace.final_error = sup_dist(x, *op.known_root);
            return trace;
        }

        StepRecord<Real> rec;
        Vector<Real> next;
        switch (method) {
            case IterationMethod::Newton:
                next = detail::newton_update(op, x, fx);
                break;
            case IterationMethod::FifthOrder: {
                auto [nx, r5] = detail::fifth_update(op, x, fx);
                next = std::move(nx);
                rec = std::move(r5);
                break;
            }
            case IterationMethod::SeventhOrder: {
                auto [nx, r7] = detail::seventh_update(op, x, fx);
                next = std::move(nx);
                rec = std::move(r7);
                break;
            }
        }
        rec.x = x;
        rec.residual_norm = r;
        if (op.known_root) rec.error_to_root = sup_dist(x, *op.known_root);
        trace.steps.push_back(std::move(rec));
        x = std::move(next);
    }
}

/// Computational order of convergence from an error sequence.
struct OrderEstimate {
    double coc = 0.0;
    int samples_used = 0;
};

/// coc = ln(e_{n+1}/e_n) / ln(e_n/e_{n-1}) over the last triple.  The input
/// must already be filtered above the arithmetic's epsilon floor; this
/// function only validates positivity and strict decrease.
inline OrderEstimate estimate_order(const std::vector<double>& errors) {
    if (errors.size() < 3)
        throw InsufficientDataError("need at least 3 errors, got " +
                                    std::to_string(errors.size()));
    for (std::size_t i = 0; i < errors.size(); ++i) {
        if (!(errors[i] > 0.0)) throw InsufficientDataError("errors must be positive");
        if (i > 0 && !(errors[i] < errors[i - 1]))
            throw InsufficientDataError("errors must be strictly decreasing");
    }
    const double e0 = errors[errors.size() - 3];
    const double e1 = errors[errors.size() - 2];
    const double e2 = errors[errors.size() - 1];
    OrderEstimate est;
    est.coc = std::log(e2 / e1) / std::log(e1 / e0);
    est.samples_used = static_cast<int>(errors.size());
    return est;
}

/// Error-to-root sequence of a trace (per-step errors plus the final one),
/// truncated at the first entry at or below `floor`.
template <class Real>
std::vector<double> error_sequence(const IterationTrace<Real>& trace, double floor) {
    std::vector<double> errs;
    auto push = [&](const std::optional<Real>& e) {
        if (!e) return false;
        const double v = to_double(*e);
        if (!(v > floor)) return false;
        errs.push_back(v);
        return true;
    };
    for (const auto& s : trace.steps)
        if (!push(s.error_to_root)) return errs;
    push(trace.final_error);
    return errs;
}

/// One majorant inequality instance: lhs = ||sub-iterate - x*||,
/// rhs = eta_index(||x_n - x*||) * ||x_n - x*||.
struct BoundCheck {
    int index = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
};

struct StepBoundReport {
    std::vector<BoundCheck> bounds;
    double error_before = 0.0;
    double error_after = 0.0;
    bool chain_holds = false;  // ||x_{n+1}-x*|| <= ||x_n-x*||

    bool all_hold() const {
        if (!chain_holds) return false;
        for (const auto& b : bounds)
            if (!b.holds) return false;
        return true;
    }
};

/// Check the theorem's per-step error bounds on a recorded trace.  Sub-iterates
/// map to majorant indices per method: seventh-order y/z1/z2/next -> 1..4;
/// fifth-order y/z -> 1,2 and next -> 3 (its last sub-step has the same
/// algebraic form); Newton gets only the monotone-chain check.  Comparisons
/// carry an absolute slack of 1e-13*(1+||x*||) for terminal-step roundoff.
template <class Real>
std::vector<StepBoundReport> verify_error_bounds(const IterationTrace<Real>& trace,
                                                 const ContinuityConstants& constants,
                                                 const Vector<Real>& x_star,
                                                 const RadiusReport& report) {
    std::vector<StepBoundReport> out;
    if (trace.steps.empty()) return out;

    const double e0 = to_double(sup_dist(trace.steps.front().x, x_star));
    if (!(e0 < report.rho_min))
        throw BallViolationError("||x0 - x*|| = " + std::to_string(e0) +
                                 " is not inside the convergence ball of radius " +
                                 std::to_string(report.rho_min));
    const double slack = 1e-13 * (1.0 + to_double(sup_norm(x_star)));

    for (std::size_t n = 0; n < trace.steps.size(); ++n) {
        const auto& s = trace.steps[n];
        const Vector<Real>& next_x =
            (n + 1 < trace.steps.size()) ? trace.steps[n + 1].x : trace.final_x;
        const double a = to_double(sup_dist(s.x, x_star));

        StepBoundReport rep;
        rep.error_before = a;
        rep.error_after = to_double(sup_dist(next_x, x_star));
        rep.chain_holds = rep.error_after <= a + slack;

        auto check = [&](const Vector<Real>& v, int index) {
            BoundCheck b;
            b.index = index;
            b.lhs = to_double(sup_dist(v, x_star));
            b.rhs = eval_majorant(constants, index, a) * a;
            b.holds = b.lhs <= b.rhs + slack;
            rep.bounds.push_back(b);
        };

        switch (trace.method) {
            case IterationMethod::SeventhOrder:
                if (s.y) check(*s.y, 1);
                if (s.z1) check(*s.z1, 2);
                if (s.z2) check(*s.z2, 3);
                check(next_x, 4);
                break;
            case IterationMethod::FifthOrder:
                if (s.y) check(*s.y, 1);
                if (s.z1) check(*s.z1, 2);
                check(next_x, 3);
                break;
            case IterationMethod::Newton:
                break;
        }
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace convball
