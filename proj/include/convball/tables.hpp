#pragma once

#include <array>
#include <cmath>

#include "convball/continuity.hpp"

// Golden reference values for the three published convergence-radius tables
// (rows rho_1..rho_4, rho).  The comparison columns (CHMT, KFS) are quoted
// reference values for display only; this tool never computes them.

namespace convball {

struct TableSpec {
    int table_id;
    ContinuityConstants constants;
    std::array<double, 5> paper_rows;  // rho1, rho2, rho3, rho4, rho
    const char* label;
    const char* comparison_name;             // nullptr when the table has none
    std::array<double, 5> comparison_rows;   // quoted, -1 marks a blank cell
};

inline std::array<TableSpec, 3> builtin_tables() {
    const double kappa3 = 0.125 * (2.5 * std::sqrt(2.0) + 1.0);
    return {{
        {1,
         ContinuityConstants::lipschitz(96.6628, 96.6628),
         {0.00295578, 0.00246894, 0.00217353, 0.00208131, 0.00208131},
         "log-polynomial (psi0 = psi = 96.6628)",
         "CHMT(theta=-2)",
         {0.006689, 0.005750, 0.003001, 0.001943, 0.001943}},
        {2,
         ContinuityConstants::hoelder(0.0608658, 0.094888, 1.0),
         {4.04772, 2.99797, 2.58569, 2.45972, 2.45972},
         "Planck radiation law (kappa0 = 0.0608658, kappa = 0.094888, q = 1)",
         "KFS",
         {9.23282, 2.40532, 1.11454, -1.0, 1.11454}},
        {3,
         ContinuityConstants::hoelder(kappa3, kappa3, 1.0),
         {0.503957, 0.420951, 0.378541, 0.363397, 0.363397},
         "Hammerstein/Green kernel (kappa0 = kappa = (5*sqrt(2)/2+1)/8, q = 1)",
         nullptr,
         {-1.0, -1.0, -1.0, -1.0, -1.0}},
    }};
}

}  // namespace convball
