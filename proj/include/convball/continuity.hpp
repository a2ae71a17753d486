#pragma once

#include <string>

#include "convball/errors.hpp"

namespace convball {

enum class ContinuityClass { Lipschitz, Hoelder };

/// Parameterization of the derivative-continuity hypothesis.
///
/// Lipschitz: ||[T'(x*)]^-1 (T'(x)-T'(y))|| <= full * ||x-y||, with the
/// center constant anchoring y = x*.  Hoelder replaces ||x-y|| by ||x-y||^q,
/// q in (0,1].  A Lipschitz instance behaves exactly like a Hoelder instance
/// with q = 1 and equal constants.
struct ContinuityConstants {
    ContinuityClass cls = ContinuityClass::Lipschitz;
    double center = 1.0;  // psi0 (Lipschitz) or kappa0 (Hoelder)
    double full = 1.0;    // psi or kappa
    double q = 1.0;       // Hoelder exponent; fixed to 1 for Lipschitz

    static ContinuityConstants lipschitz(double psi0, double psi) {
        ContinuityConstants c{ContinuityClass::Lipschitz, psi0, psi, 1.0};
        c.validate();
        return c;
    }

    static ContinuityConstants hoelder(double kappa0, double kappa, double q) {
        ContinuityConstants c{ContinuityClass::Hoelder, kappa0, kappa, q};
        c.validate();
        return c;
    }

    void validate() const {
        if (!(center > 0.0) || !(full > 0.0))
            throw DomainError("continuity constants must be positive");
        if (center > full)
            throw DomainError("center constant must not exceed the full constant (" +
                              std::to_string(center) + " > " + std::to_string(full) + ")");
        if (cls == ContinuityClass::Lipschitz) {
            if (q != 1.0) throw DomainError("Lipschitz constants require q = 1");
        } else if (!(q > 0.0 && q <= 1.0)) {
            throw DomainError("Hoelder exponent q must lie in (0,1]");
        }
    }
};

}  // namespace convball
