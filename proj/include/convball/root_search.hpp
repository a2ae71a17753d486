#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "convball/continuity.hpp"
#include "convball/errors.hpp"
#include "convball/majorant.hpp"

namespace convball {

/// Bracket-scan + bisection controls for locating the smallest zeros of H_i/M_i.
struct RootSearchConfig {
    int grid_points = 10000;     // bracket scan resolution
    double abs_tol = 1e-12;      // bisection stopping width
    double domain_margin = 1e-9; // relative shrink of the upper search limit

    void validate() const {
        if (grid_points < 100) throw DomainError("grid_points must be >= 100");
        if (!(abs_tol > 0.0)) throw DomainError("abs_tol must be positive");
        if (!(domain_margin > 0.0 && domain_margin < 1.0))
            throw DomainError("domain_margin must lie in (0,1)");
    }
};

/// Convergence-radius report: the four majorant roots, their minimum, the
/// uniqueness-radius supremum, and the interval limit the majorants live on.
///
/// The uniqueness supremum follows the stated theorem of each class:
/// 1/psi0 with an open endpoint for Lipschitz, ((1+q)/kappa0)^(1/q) with a
/// closed endpoint for Hoelder.  (The Lipschitz proof actually supports
/// 2/psi0; the stated — more conservative — interval is reported.)
struct RadiusReport {
    std::array<double, 4> rho{};  // rho_1..rho_4
    double rho_min = 0.0;
    double uniqueness_sup = 0.0;
    bool uniqueness_closed = false;
    double domain_limit = 0.0;
    ContinuityConstants constants;
};

namespace detail {

// Gap value with poles and non-finite results mapped to +inf (beyond the ball).
inline double gap_or_inf(const ContinuityConstants& c, int i, double a) {
    try {
        const double g = eval_gap(c, i, a);
        return std::isfinite(g) ? g : std::numeric_limits<double>::infinity();
    } catch (const DomainError&) {
        return std::numeric_limits<double>::infinity();
    }
}

}  // namespace detail

/// Leftmost sign change of a -> eval_gap(c, i, a) on (0, search_upper],
/// refined by bisection to a bracket of width <= cfg.abs_tol (or to machine
/// resolution if abs_tol is below it).  Grid points past a pole count as
/// positive.  Throws NoRootError when the scan finds no sign change.
inline double smallest_positive_root(const ContinuityConstants& c, int i,
                                     double search_upper, const RootSearchConfig& cfg) {
    c.validate();
    cfg.validate();
    const double cap = domain_limit(c) * (1.0 - cfg.domain_margin);
    double upper = std::min(search_upper, cap);
    if (!(upper > 0.0)) throw DomainError("search_upper must be positive");

    const int n = cfg.grid_points;
    double lo = 0.0;
    double hi = -1.0;
    for (int k = 1; k <= n; ++k) {
        const double a = upper * static_cast<double>(k) / static_cast<double>(n);
        if (detail::gap_or_inf(c, i, a) >= 0.0) {
            hi = a;
            break;
        }
        lo = a;
    }
    if (hi < 0.0)
        throw NoRootError(i, "no sign change of gap function " + std::to_string(i) +
                                 " on (0, " + std::to_string(upper) + "]");

    while (hi - lo > cfg.abs_tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // machine resolution reached
        if (detail::gap_or_inf(c, i, mid) >= 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

/// Assemble the full radius report.  rho_1 comes from the closed form; each
/// subsequent rho_i is the smallest root searched on (0, rho_{i-1}), which
/// yields the ordering chain 0 < rho_4 <= rho_3 <= rho_2 <= rho_1 < limit.
inline RadiusReport radius_report(const ContinuityConstants& c,
                                  const RootSearchConfig& cfg = {}) {
    c.validate();
    cfg.validate();
    RadiusReport r;
    r.constants = c;
    r.domain_limit = domain_limit(c);
    r.rho[0] = rho1_closed_form(c);
    double upper = r.rho[0];
    for (int i = 2; i <= 4; ++i) {
        upper *= 1.0 - cfg.domain_margin;
        r.rho[i - 1] = smallest_positive_root(c, i, upper, cfg);
        upper = r.rho[i - 1];
    }
    r.rho_min = *std::min_element(r.rho.begin(), r.rho.end());
    if (c.cls == ContinuityClass::Lipschitz) {
        r.uniqueness_sup = r.domain_limit;
        r.uniqueness_closed = false;
    } else {
        r.uniqueness_sup = std::pow((1.0 + c.q) / c.center, 1.0 / c.q);
        r.uniqueness_closed = true;
    }
    return r;
}

}  // namespace convball
