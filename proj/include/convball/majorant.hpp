#pragma once

#include <cmath>

#include "convball/continuity.hpp"
#include "convball/errors.hpp"

// Scalar majorant functions of the four-step seventh-order scheme.
//
// eta_i(a) (Lipschitz) and mu_i(a) (Hoelder) bound the contraction factor of
// the i-th sub-step at distance a from the root:
//   sub-step 1 (y)     -> eta_1 / mu_1
//   sub-step 2 (z^(1)) -> eta_2 / mu_2
//   sub-step 3 (z^(2)) -> eta_3 / mu_3
//   sub-step 4 (x_next)-> eta_4 / mu_4
// All are defined on [0, 1/psi0) resp. [0, (1/kappa0)^(1/q)); crossing any
// denominator's pole raises DomainError (callers bracketing roots treat that
// as "beyond the ball", value conceptually +inf).
//
// The two families are deliberately separate code paths; the q = 1 identity
// between them is asserted in the tests rather than enforced by sharing code.

namespace convball {

namespace detail {

struct LipschitzMajorant {
    double psi0, psi;

    double eta1(double a) const {
        const double den = 1.0 - psi0 * a;
        if (den <= 0.0) throw DomainError("eta1: 1 - psi0*a is nonpositive");
        return (psi * a / 2.0 + (1.0 + 0.5 * psi0 * a) / 2.0) / den;
    }

    double p(double a) const { return psi0 * eta1(a) * a; }

    double one_minus_p(double a) const {
        const double omp = 1.0 - p(a);
        if (omp <= 0.0) throw DomainError("1 - p(a) is nonpositive");
        return omp;
    }

    double eta2(double a) const {
        const double den = 1.0 - psi0 * a;  // positive, checked by eta1
        const double omp = one_minus_p(a);
        const double e1 = eta1(a);
        return (psi * a / 2.0 + psi * (1.0 + e1) * (0.5 * psi0 * a + 1.0) * a / omp) / den;
    }

    // eta3 with ej = eta2(a), eta4 with ej = eta3(a); both share this shape.
    double eta_next(double a, double ej) const {
        const double dj = 1.0 - psi0 * ej * a;
        if (dj <= 0.0) throw DomainError("1 - psi0*eta_j*a is nonpositive");
        const double omp = one_minus_p(a);
        const double e1 = eta1(a);
        const double inner = 1.0 + 0.5 * psi0 * ej * a;
        const double t1 = psi * ej * a / (2.0 * dj);
        const double t2 = psi * (e1 + ej) * inner * a / (dj * omp);
        const double t3 = psi * (1.0 + e1) * a * inner / ((1.0 - psi0 * a) * omp);
        return (t1 + t2 + t3) * ej;
    }

    double eta3(double a) const { return eta_next(a, eta2(a)); }
    double eta4(double a) const { return eta_next(a, eta3(a)); }

    double eta(int i, double a) const {
        switch (i) {
            case 1: return eta1(a);
            case 2: return eta2(a);
            case 3: return eta3(a);
            case 4: return eta4(a);
        }
        throw DomainError("majorant index must be in {1,2,3,4}");
    }
};

struct HoelderMajorant {
    double kappa0, kappa, q;

    double mu1(double a) const {
        const double aq = std::pow(a, q);
        const double den = 1.0 - kappa0 * aq;
        if (den <= 0.0) throw DomainError("mu1: 1 - kappa0*a^q is nonpositive");
        return (kappa * aq / (q + 1.0) + (1.0 + kappa0 * aq / (q + 1.0)) / 2.0) / den;
    }

    double p(double a) const { return kappa0 * std::pow(mu1(a), q) * std::pow(a, q); }

    double one_minus_p(double a) const {
        const double omp = 1.0 - p(a);
        if (omp <= 0.0) throw DomainError("1 - p(a) is nonpositive");
        return omp;
    }

    double mu2(double a) const {
        const double aq = std::pow(a, q);
        const double den = 1.0 - kappa0 * aq;  // positive, checked by mu1
        const double omp = one_minus_p(a);
        const double m1q = std::pow(mu1(a), q);
        return (kappa * aq / (q + 1.0) +
                kappa * (1.0 + m1q) * (kappa0 * aq / (q + 1.0) + 1.0) * aq / omp) /
               den;
    }

    double mu_next(double a, double mj) const {
        const double aq = std::pow(a, q);
        const double mjq = std::pow(mj, q);
        const double dj = 1.0 - kappa0 * mjq * aq;
        if (dj <= 0.0) throw DomainError("1 - kappa0*mu_j^q*a^q is nonpositive");
        const double omp = one_minus_p(a);
        const double m1q = std::pow(mu1(a), q);
        const double inner = 1.0 + kappa0 * mjq * aq / (q + 1.0);
        const double t1 = kappa * mjq * aq / ((q + 1.0) * dj);
        const double t2 = kappa * (m1q + mjq) * aq * inner / (dj * omp);
        const double t3 = kappa * (1.0 + m1q) * aq * inner / ((1.0 - kappa0 * aq) * omp);
        return (t1 + t2 + t3) * mj;
    }

    double mu3(double a) const { return mu_next(a, mu2(a)); }
    double mu4(double a) const { return mu_next(a, mu3(a)); }

    double mu(int i, double a) const {
        switch (i) {
            case 1: return mu1(a);
            case 2: return mu2(a);
            case 3: return mu3(a);
            case 4: return mu4(a);
        }
        throw DomainError("majorant index must be in {1,2,3,4}");
    }
};

inline void check_eval_point(double a) {
    if (!(a >= 0.0) || !std::isfinite(a))
        throw DomainError("majorant argument must be a finite nonnegative real");
}

}  // namespace detail

/// Right end of the interval the majorants live on: 1/psi0, resp. (1/kappa0)^(1/q).
inline double domain_limit(const ContinuityConstants& c) {
    c.validate();
    if (c.cls == ContinuityClass::Lipschitz) return 1.0 / c.center;
    return std::pow(1.0 / c.center, 1.0 / c.q);
}

/// p(a) = psi0*eta1(a)*a, resp. kappa0*mu1(a)^q*a^q.
inline double eval_p(const ContinuityConstants& c, double a) {
    c.validate();
    detail::check_eval_point(a);
    if (c.cls == ContinuityClass::Lipschitz)
        return detail::LipschitzMajorant{c.center, c.full}.p(a);
    return detail::HoelderMajorant{c.center, c.full, c.q}.p(a);
}

/// eta_i(a) (Lipschitz) or mu_i(a) (Hoelder), i in {1,2,3,4}.
inline double eval_majorant(const ContinuityConstants& c, int i, double a) {
    c.validate();
    detail::check_eval_point(a);
    if (c.cls == ContinuityClass::Lipschitz)
        return detail::LipschitzMajorant{c.center, c.full}.eta(i, a);
    return detail::HoelderMajorant{c.center, c.full, c.q}.mu(i, a);
}

/// H_i(a) = eta_i(a) - 1, resp. M_i(a) = mu_i(a) - 1; negative at a = 0,
/// crosses zero at the radius rho_i.
inline double eval_gap(const ContinuityConstants& c, int i, double a) {
    return eval_majorant(c, i, a) - 1.0;
}

/// Closed form of the first radius: 2/(2*psi + 5*psi0), resp.
/// ((q+1)/(2*kappa + kappa0*(3+2q)))^(1/q).  Satisfies eta_1(rho_1) = 1.
inline double rho1_closed_form(const ContinuityConstants& c) {
    c.validate();
    if (c.cls == ContinuityClass::Lipschitz) return 2.0 / (2.0 * c.full + 5.0 * c.center);
    return std::pow((c.q + 1.0) / (2.0 * c.full + c.center * (3.0 + 2.0 * c.q)),
                    1.0 / c.q);
}

/// The three auxiliary inverse/operator bounds used by the Hoelder theorem:
///   op_norm  = 1 + kappa0*dist^q            (||[T'(x*)]^-1 T'(x)||)
///   segment  = 1 + kappa0*t^q*dist^q        (along x* + t(x-x*))
///   value    = (1 + kappa0/(q+1)*dist^q)*dist  (||[T'(x*)]^-1 T(x)||)
struct HoelderBounds {
    double op_norm;
    double segment;
    double value;
};

/// Lipschitz constants delegate with q = 1.
inline HoelderBounds hoelder_bounds(const ContinuityConstants& c, double dist, double t) {
    c.validate();
    if (!(dist >= 0.0)) throw DomainError("hoelder_bounds: dist must be nonnegative");
    if (!(t >= 0.0 && t <= 1.0)) throw DomainError("hoelder_bounds: t must lie in [0,1]");
    const double k0 = c.center;
    const double q = c.q;
    const double dq = std::pow(dist, q);
    HoelderBounds b;
    b.op_norm = 1.0 + k0 * dq;
    b.segment = 1.0 + k0 * std::pow(t, q) * dq;
    b.value = (1.0 + k0 / (q + 1.0) * dq) * dist;
    return b;
}

}  // namespace convball
