#pragma once

#include <cmath>
#include <vector>

#include "convball/errors.hpp"

namespace convball {

/// Quadrature rule on (0,1): strictly increasing nodes, positive weights
/// summing to 1.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule mapped from [-1,1] to (0,1); exact for
/// polynomials of degree <= 2n-1.  Nodes via Newton on the Legendre
/// recurrence from the Chebyshev-like initial guesses.
inline QuadratureRule gauss_legendre_rule(int n) {
    if (n < 1) throw DomainError("gauss_legendre_rule: n must be >= 1");
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    const double pi = 3.14159265358979323846;
    for (int k = 0; k < (n + 1) / 2; ++k) {
        double x = std::cos(pi * (k + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            // Legendre P_n(x) and P'_n(x) by the three-term recurrence.
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // x is in descending order over k; map symmetric pair to (0,1).
        rule.nodes[k] = (1.0 - x) / 2.0;
        rule.nodes[n - 1 - k] = (1.0 + x) / 2.0;
        rule.weights[k] = w / 2.0;
        rule.weights[n - 1 - k] = w / 2.0;
    }
    return rule;
}

}  // namespace convball
