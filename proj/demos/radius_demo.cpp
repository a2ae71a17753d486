// Minimal library walkthrough: compute a radius report, run the seventh-order
// iteration from inside the ball, and check the theorem's per-step bounds.

#include <cstdio>

#include "convball/convball.hpp"

int main() {
    using namespace convball;

    // Planck radiation-law benchmark: kappa0 = 0.0608658, kappa = 0.094888, q = 1.
    const auto constants = ContinuityConstants::hoelder(0.0608658, 0.094888, 1.0);
    const RadiusReport report = radius_report(constants);
    std::printf("convergence radius rho = %.6f (rho1..rho4: %.5f %.5f %.5f %.5f)\n",
                report.rho_min, report.rho[0], report.rho[1], report.rho[2], report.rho[3]);

    const auto op = planck_problem<double>();
    const double x_star = (*op.known_root)[0];
    const double x0 = x_star + 0.9 * report.rho_min;

    const auto trace = solve(IterationMethod::SeventhOrder, op, {x0}, SolveConfig{});
    std::printf("seventh-order from x0 = %.4f: %zu iterations, final error %.3e\n", x0,
                trace.steps.size(), to_double(*trace.final_error));

    const auto checks = verify_error_bounds(trace, constants, *op.known_root, report);
    bool all = true;
    for (const auto& step : checks) all = all && step.all_hold();
    std::printf("per-step error bounds: %s\n", all ? "all hold" : "VIOLATED");
    return all ? 0 : 1;
}
