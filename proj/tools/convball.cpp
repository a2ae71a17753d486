// convball — convergence-ball radii, high-order iterations, and table
// reproduction for the four-step seventh-order scheme.
//
// Exit codes: 0 success; 1 reproduction rows out of tolerance; 2 bad flags or
// invalid constants; 3 radius root-finding failure; 4 non-convergence or an
// iterate leaving the domain; 5 singular Jacobian; 6 problem lacks a known
// root; 7 too few usable errors for the order estimate.
// stdout carries data, stderr diagnostics.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "convball/convball.hpp"

using nlohmann::ordered_json;
using namespace convball;

namespace {

std::string fmt(double v, const char* spec = "%.17g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string fmt9(double v) { return fmt(v, "%.9g"); }

enum class Format { Markdown, Csv, Json };

Format parse_format(const std::string& s) {
    if (s == "markdown") return Format::Markdown;
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    throw DomainError("unknown format '" + s + "' (markdown|csv|json)");
}

ContinuityConstants make_constants(const std::string& cls, double c0, double c, double q) {
    if (cls == "lipschitz") {
        if (q != 1.0) throw DomainError("--q is only meaningful with --class hoelder");
        return ContinuityConstants::lipschitz(c0, c);
    }
    if (cls == "hoelder") return ContinuityConstants::hoelder(c0, c, q);
    throw DomainError("unknown continuity class '" + cls + "' (lipschitz|hoelder)");
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::size_t begin = 0;
    for (std::size_t i = 0; i <= csv.size(); ++i) {
        if (i == csv.size() || csv[i] == ',') {
            out.push_back(csv.substr(begin, i - begin));
            begin = i + 1;
        }
    }
    return out;
}

struct ProblemSource {
    std::string example;  // logpoly | planck | hammerstein (empty when file given)
    std::string file;
    int nodes = 16;  // hammerstein discretization size

    template <class Real>
    OperatorSpec<Real> build() const {
        if (!file.empty()) return make_problem<Real>(load_problem_file(file));
        if (example == "logpoly") return logpoly_problem<Real>();
        if (example == "planck") return planck_problem<Real>();
        if (example == "hammerstein")
            return hammerstein_problem<Real>(nodes, gauss_legendre_rule(nodes));
        throw DomainError("unknown example '" + example +
                          "' (logpoly|planck|hammerstein)");
    }

    std::string name() const { return file.empty() ? example : file; }
};

template <class Real>
Vector<Real> parse_x0(const std::string& list, std::size_t dim) {
    std::vector<std::string> parts = split_list(list);
    Vector<Real> x;
    for (const auto& p : parts) x.push_back(real_from_literal<Real>(p));
    if (x.size() == 1 && dim > 1) x = Vector<Real>(dim, x[0]);  // scalar broadcast
    if (x.size() != dim)
        throw DomainError("--x0 has " + std::to_string(x.size()) +
                          " components; the problem has " + std::to_string(dim));
    return x;
}

IterationMethod parse_method(const std::string& m) {
    if (m == "newton") return IterationMethod::Newton;
    if (m == "fifth") return IterationMethod::FifthOrder;
    if (m == "seventh") return IterationMethod::SeventhOrder;
    throw DomainError("unknown method '" + m + "' (newton|fifth|seventh)");
}

// ---------------------------------------------------------------------------
// radius

ordered_json radius_json(const RadiusReport& r) {
    ordered_json j;
    j["schema"] = "convball.radius/1";
    j["c0"] = r.constants.center;
    j["c"] = r.constants.full;
    j["q"] = r.constants.q;
    j["rho"] = {r.rho[0], r.rho[1], r.rho[2], r.rho[3]};
    j["rho_min"] = r.rho_min;
    j["domain_limit"] = r.domain_limit;
    j["uniqueness_sup"] = r.uniqueness_sup;
    j["uniqueness_closed"] = r.uniqueness_closed;
    return j;
}

void print_radius(const RadiusReport& r, Format f) {
    switch (f) {
        case Format::Json:
            std::cout << radius_json(r).dump(2) << "\n";
            return;
        case Format::Csv:
            std::cout << "quantity,value\n";
            for (int i = 0; i < 4; ++i)
                std::cout << "rho" << i + 1 << "," << fmt(r.rho[i]) << "\n";
            std::cout << "rho," << fmt(r.rho_min) << "\n";
            std::cout << "domain_limit," << fmt(r.domain_limit) << "\n";
            std::cout << "uniqueness_sup," << fmt(r.uniqueness_sup) << "\n";
            std::cout << "uniqueness_closed," << (r.uniqueness_closed ? 1 : 0) << "\n";
            return;
        case Format::Markdown:
            std::cout << "# convergence radii ("
                      << (r.constants.cls == ContinuityClass::Lipschitz ? "Lipschitz"
                                                                        : "Hoelder")
                      << ", c0=" << fmt9(r.constants.center)
                      << ", c=" << fmt9(r.constants.full) << ", q=" << fmt9(r.constants.q)
                      << ")\n\n";
            std::cout << "| quantity | value |\n|---|---|\n";
            for (int i = 0; i < 4; ++i)
                std::cout << "| rho" << i + 1 << " | " << fmt9(r.rho[i]) << " |\n";
            std::cout << "| rho (min) | " << fmt9(r.rho_min) << " |\n";
            std::cout << "| domain limit | " << fmt9(r.domain_limit) << " |\n";
            std::cout << "| uniqueness sup | " << fmt9(r.uniqueness_sup)
                      << (r.uniqueness_closed ? " (closed endpoint)" : " (open endpoint)")
                      << " |\n";
            return;
    }
}

int cmd_radius(const std::string& cls, double c0, double c, double q, double tol,
               Format format) {
    ContinuityConstants constants = make_constants(cls, c0, c, q);
    RootSearchConfig cfg;
    cfg.abs_tol = tol;
    const RadiusReport r = radius_report(constants, cfg);
    print_radius(r, format);
    return 0;
}

// ---------------------------------------------------------------------------
// solve / order

template <class Real>
ordered_json vec_json(const Vector<Real>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& x : v) a.push_back(to_double(x));
    return a;
}

template <class Real>
std::string vec_str(const Vector<Real>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += fmt(to_double(v[i]), "%.15g");
    }
    return s + "]";
}

struct BoundRequest {
    ContinuityConstants constants;
    RadiusReport report;
};

template <class Real>
int run_solve(IterationMethod method, const OperatorSpec<Real>& op, const std::string& x0_list,
              const SolveConfig& cfg, Format format,
              const std::optional<BoundRequest>& bounds_req) {
    const Vector<Real> x0 = parse_x0<Real>(x0_list, op.dimension);
    IterationTrace<Real> trace;
    try {
        trace = solve(method, op, x0, cfg);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }

    std::vector<StepBoundReport> bound_rows;
    if (bounds_req) {
        if (!op.known_root) {
            std::cerr << "error: --verify-bounds needs a problem with a known root\n";
            return 6;
        }
        bound_rows = verify_error_bounds(trace, bounds_req->constants, *op.known_root,
                                         bounds_req->report);
    }

    const bool has_err = op.known_root.has_value();
    switch (format) {
        case Format::Json: {
            ordered_json j;
            j["schema"] = "convball.solve/1";
            j["method"] = method_name(method);
            j["converged"] = trace.converged;
            j["iterations"] = trace.steps.size();
            j["final_x"] = vec_json(trace.final_x);
            j["final_residual"] = to_double(trace.final_residual);
            j["final_error"] =
                trace.final_error ? ordered_json(to_double(*trace.final_error)) : nullptr;
            ordered_json steps = ordered_json::array();
            for (const auto& s : trace.steps) {
                ordered_json js;
                js["x"] = vec_json(s.x);
                js["y"] = s.y ? vec_json(*s.y) : ordered_json(nullptr);
                js["z1"] = s.z1 ? vec_json(*s.z1) : ordered_json(nullptr);
                js["z2"] = s.z2 ? vec_json(*s.z2) : ordered_json(nullptr);
                js["residual"] = to_double(s.residual_norm);
                js["error"] =
                    s.error_to_root ? ordered_json(to_double(*s.error_to_root)) : nullptr;
                steps.push_back(std::move(js));
            }
            j["steps"] = std::move(steps);
            if (bounds_req) {
                ordered_json rows = ordered_json::array();
                for (std::size_t n = 0; n < bound_rows.size(); ++n) {
                    const auto& r = bound_rows[n];
                    ordered_json jr;
                    jr["step"] = n;
                    ordered_json checks = ordered_json::array();
                    for (const auto& b : r.bounds)
                        checks.push_back({{"index", b.index},
                                          {"lhs", b.lhs},
                                          {"rhs", b.rhs},
                                          {"holds", b.holds}});
                    jr["checks"] = std::move(checks);
                    jr["error_before"] = r.error_before;
                    jr["error_after"] = r.error_after;
                    jr["chain_holds"] = r.chain_holds;
                    rows.push_back(std::move(jr));
                }
                j["bounds"] = std::move(rows);
            }
            std::cout << j.dump(2) << "\n";
            break;
        }
        case Format::Csv: {
            std::cout << "step,residual" << (has_err ? ",error" : "") << "\n";
            for (std::size_t n = 0; n < trace.steps.size(); ++n) {
                std::cout << n << "," << fmt(to_double(trace.steps[n].residual_norm));
                if (has_err) std::cout << "," << fmt(to_double(*trace.steps[n].error_to_root));
                std::cout << "\n";
            }
            std::cout << trace.steps.size() << "," << fmt(to_double(trace.final_residual));
            if (has_err) std::cout << "," << fmt(to_double(*trace.final_error));
            std::cout << "\n";
            break;
        }
        case Format::Markdown: {
            std::cout << "# " << method_name(method) << " iteration\n\n";
            std::cout << "| n | residual" << (has_err ? " | error" : "") << " |\n";
            std::cout << "|---|---" << (has_err ? "|---" : "") << "|\n";
            for (std::size_t n = 0; n < trace.steps.size(); ++n) {
                std::cout << "| " << n << " | " << fmt9(to_double(trace.steps[n].residual_norm));
                if (has_err)
                    std::cout << " | " << fmt9(to_double(*trace.steps[n].error_to_root));
                std::cout << " |\n";
            }
            std::cout << "| " << trace.steps.size() << " | "
                      << fmt9(to_double(trace.final_residual));
            if (has_err) std::cout << " | " << fmt9(to_double(*trace.final_error));
            std::cout << " |\n\n";
            std::cout << "converged: " << (trace.converged ? "yes" : "no")
                      << ", iterations: " << trace.steps.size() << "\n";
            std::cout << "final x: " << vec_str(trace.final_x) << "\n";
            if (bounds_req) {
                std::cout << "\n## per-step error-bound checks\n\n";
                std::cout << "| n | bound | lhs | rhs | holds |\n|---|---|---|---|---|\n";
                bool all = true;
                for (std::size_t n = 0; n < bound_rows.size(); ++n) {
                    for (const auto& b : bound_rows[n].bounds) {
                        std::cout << "| " << n << " | eta" << b.index << " | " << fmt9(b.lhs)
                                  << " | " << fmt9(b.rhs) << " | "
                                  << (b.holds ? "yes" : "NO") << " |\n";
                        all = all && b.holds;
                    }
                    std::cout << "| " << n << " | chain | "
                              << fmt9(bound_rows[n].error_after) << " | "
                              << fmt9(bound_rows[n].error_before) << " | "
                              << (bound_rows[n].chain_holds ? "yes" : "NO") << " |\n";
                    all = all && bound_rows[n].chain_holds;
                }
                std::cout << "\nall bounds hold: " << (all ? "yes" : "NO") << "\n";
            }
            break;
        }
    }
    if (!trace.converged) {
        std::cerr << "error: not converged after " << trace.steps.size() << " iterations\n";
        return 4;
    }
    return 0;
}

int cmd_solve(const std::string& method_s, const ProblemSource& src, const std::string& x0,
              double tol, int max_iter, int precision, Format format, bool verify_bounds,
              const std::string& cls, double c0, double c, double q) {
    const IterationMethod method = parse_method(method_s);
    SolveConfig cfg;
    cfg.residual_tol = tol;
    cfg.max_iterations = max_iter;
    cfg.precision_digits = precision;

    std::optional<BoundRequest> bounds_req;
    if (verify_bounds) {
        ContinuityConstants constants = make_constants(cls, c0, c, q);
        bounds_req = BoundRequest{constants, radius_report(constants)};
    }

    if (precision <= 16) return run_solve(method, src.build<double>(), x0, cfg, format, bounds_req);
    BigFloat::PrecisionGuard guard(precision);
    return run_solve(method, src.build<BigFloat>(), x0, cfg, format, bounds_req);
}

int cmd_order(const std::string& method_s, const ProblemSource& src, const std::string& x0,
              int precision, int max_iter, Format format) {
    if (precision < 30) {
        std::cerr << "error: --precision " << precision
                  << " is too low for an order estimate; high-order convergence reaches the "
                     "rounding floor within two steps (need >= 30 significant digits)\n";
        return 7;
    }
    const IterationMethod method = parse_method(method_s);
    BigFloat::PrecisionGuard guard(precision);
    const OperatorSpec<BigFloat> op = src.build<BigFloat>();
    if (!op.known_root) {
        std::cerr << "error: order estimation needs a problem with a known root\n";
        return 6;
    }
    SolveConfig cfg;
    cfg.residual_tol = std::pow(10.0, 1 - precision);
    cfg.max_iterations = max_iter;
    cfg.precision_digits = precision;

    IterationTrace<BigFloat> trace = solve(method, op, parse_x0<BigFloat>(x0, op.dimension), cfg);
    const double scale = 1.0 + to_double(sup_norm(*op.known_root));
    const double floor = std::pow(10.0, 3 - precision) * scale;
    const std::vector<double> errors = error_sequence(trace, floor);

    OrderEstimate est;
    try {
        est = estimate_order(errors);
    } catch (const InsufficientDataError& e) {
        std::cerr << "error: " << e.what() << " (usable errors above the 10^"
                  << 3 - precision << " floor)\n";
        return 7;
    }

    switch (format) {
        case Format::Json: {
            ordered_json j;
            j["schema"] = "convball.order/1";
            j["method"] = method_name(method);
            j["precision_digits"] = precision;
            j["coc"] = est.coc;
            j["samples_used"] = est.samples_used;
            j["errors"] = errors;
            std::cout << j.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            std::cout << "quantity,value\ncoc," << fmt(est.coc) << "\nsamples_used,"
                      << est.samples_used << "\n";
            break;
        case Format::Markdown:
            std::cout << "# computational order of convergence\n\n";
            std::cout << "method: " << method_name(method) << ", precision: " << precision
                      << " digits\n";
            std::cout << "errors:";
            for (double e : errors) std::cout << " " << fmt9(e);
            std::cout << "\ncoc: " << fmt9(est.coc) << " (from " << est.samples_used
                      << " errors)\n";
            break;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// reproduce

int cmd_reproduce(const std::string& which, double rtol, Format format) {
    std::vector<TableSpec> tables;
    for (const auto& t : builtin_tables())
        if (which == "all" || which == std::to_string(t.table_id)) tables.push_back(t);
    if (tables.empty()) throw DomainError("--table must be 1, 2, 3 or all");

    static const char* row_names[5] = {"rho1", "rho2", "rho3", "rho4", "rho"};
    bool all_pass = true;
    ordered_json jtables = ordered_json::array();

    if (format == Format::Csv) std::cout << "label,computed,paper,rel_dev,status\n";

    for (const auto& t : tables) {
        const RadiusReport rep = radius_report(t.constants);
        const double computed[5] = {rep.rho[0], rep.rho[1], rep.rho[2], rep.rho[3],
                                    rep.rho_min};
        ordered_json jrows = ordered_json::array();

        if (format == Format::Markdown) {
            std::cout << "## Table " << t.table_id << ": " << t.label << "\n\n";
            std::cout << "| radius | computed | paper | rel_dev | status |";
            if (t.comparison_name) std::cout << " " << t.comparison_name << " |";
            std::cout << "\n|---|---|---|---|---|" << (t.comparison_name ? "---|" : "")
                      << "\n";
        }

        for (int i = 0; i < 5; ++i) {
            const double dev = std::abs(computed[i] - t.paper_rows[i]) / t.paper_rows[i];
            const bool pass = dev <= rtol;
            all_pass = all_pass && pass;
            switch (format) {
                case Format::Csv:
                    std::cout << "table" << t.table_id << "." << row_names[i] << ","
                              << fmt(computed[i]) << "," << fmt(t.paper_rows[i]) << ","
                              << fmt(dev) << "," << (pass ? "PASS" : "FAIL") << "\n";
                    break;
                case Format::Markdown:
                    std::cout << "| " << row_names[i] << " | " << fmt9(computed[i]) << " | "
                              << fmt9(t.paper_rows[i]) << " | " << fmt(dev, "%.2e") << " | "
                              << (pass ? "PASS" : "FAIL") << " |";
                    if (t.comparison_name) {
                        if (t.comparison_rows[i] >= 0.0)
                            std::cout << " " << fmt9(t.comparison_rows[i]) << " |";
                        else
                            std::cout << " - |";
                    }
                    std::cout << "\n";
                    break;
                case Format::Json:
                    jrows.push_back({{"label", row_names[i]},
                                     {"computed", computed[i]},
                                     {"paper", t.paper_rows[i]},
                                     {"rel_dev", dev},
                                     {"pass", pass}});
                    break;
            }
            if (!pass)
                std::cerr << "FAIL table " << t.table_id << " " << row_names[i]
                          << ": computed " << fmt(computed[i]) << " vs paper "
                          << fmt(t.paper_rows[i]) << " (rel dev " << fmt(dev, "%.4g")
                          << " > rtol " << fmt(rtol, "%.4g") << ")\n";
        }

        if (format == Format::Markdown) {
            if (t.comparison_name)
                std::cout << "\n(" << t.comparison_name
                          << " column quoted from the published comparison; not computed "
                             "by this tool)\n";
            std::cout << "\n";
        }
        if (format == Format::Json) {
            ordered_json jt;
            jt["table"] = t.table_id;
            jt["label"] = t.label;
            jt["c0"] = t.constants.center;
            jt["c"] = t.constants.full;
            jt["q"] = t.constants.q;
            jt["rows"] = std::move(jrows);
            jtables.push_back(std::move(jt));
        }
    }

    if (format == Format::Json) {
        ordered_json j;
        j["schema"] = "convball.reproduce/1";
        j["rtol"] = rtol;
        j["tables"] = std::move(jtables);
        j["all_pass"] = all_pass;
        std::cout << j.dump(2) << "\n";
    }
    return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// estimate

int cmd_estimate(const ProblemSource& src, double q, double radius, int samples,
                 std::uint64_t seed, Format format) {
    const OperatorSpec<double> op = src.build<double>();
    if (!op.known_root) {
        std::cerr << "error: constant estimation needs a problem with a known root\n";
        return 6;
    }
    const ConstantEstimate est = estimate_constants(op, q, radius, samples, seed);
    switch (format) {
        case Format::Json: {
            ordered_json j;
            j["schema"] = "convball.estimate/1";
            j["kappa0_hat"] = est.kappa0_hat;
            j["kappa_hat"] = est.kappa_hat;
            j["q"] = est.q;
            j["samples"] = est.samples;
            j["ball_radius"] = est.ball_radius;
            j["seed"] = seed;
            j["note"] = "sampled lower bound";
            std::cout << j.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            std::cout << "quantity,value\nkappa0_hat," << fmt(est.kappa0_hat)
                      << "\nkappa_hat," << fmt(est.kappa_hat) << "\nq," << fmt(est.q)
                      << "\nsamples," << est.samples << "\nball_radius,"
                      << fmt(est.ball_radius) << "\nseed," << seed << "\n";
            break;
        case Format::Markdown:
            std::cout << "# continuity-constant estimate (sampled lower bound)\n\n";
            std::cout << "| quantity | value |\n|---|---|\n";
            std::cout << "| kappa0_hat (center) | " << fmt9(est.kappa0_hat) << " |\n";
            std::cout << "| kappa_hat (full) | " << fmt9(est.kappa_hat) << " |\n";
            std::cout << "| q | " << fmt9(est.q) << " |\n";
            std::cout << "| samples | " << est.samples << " |\n";
            std::cout << "| ball radius | " << fmt9(est.ball_radius) << " |\n";
            std::cout << "\nnote: sampled lower bounds of the true suprema; not upper "
                         "bounds\n";
            break;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"convergence-ball analysis of a four-step seventh-order iteration"};
    app.require_subcommand(1);

    // radius
    auto* radius = app.add_subcommand("radius", "compute the convergence-radius report");
    std::string r_cls;
    double r_c0 = 0, r_c = 0, r_q = 1.0, r_tol = 1e-12;
    std::string r_format = "markdown";
    radius->add_option("--class", r_cls, "lipschitz|hoelder")->required();
    radius->add_option("--c0", r_c0, "center constant (psi0/kappa0)")->required();
    radius->add_option("--c", r_c, "full constant (psi/kappa)")->required();
    radius->add_option("--q", r_q, "Hoelder exponent in (0,1]");
    radius->add_option("--tol", r_tol, "bisection width tolerance");
    radius->add_option("--format", r_format, "markdown|csv|json");

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "run an iteration and print the trace");
    std::string s_method, s_example, s_problem, s_x0, s_format = "markdown", s_cls = "lipschitz";
    double s_tol = 1e-12, s_c0 = 0, s_c = 0, s_q = 1.0;
    int s_max_iter = 100, s_precision = 16, s_nodes = 16;
    bool s_verify = false;
    solve_cmd->add_option("--method", s_method, "newton|fifth|seventh")->required();
    auto* s_ex = solve_cmd->add_option("--example", s_example, "logpoly|planck|hammerstein");
    auto* s_pf = solve_cmd->add_option("--problem", s_problem, "problem-definition file");
    solve_cmd->add_option("--x0", s_x0, "initial iterate (comma list; scalar broadcasts)")
        ->required();
    solve_cmd->add_option("--tol", s_tol, "residual sup-norm tolerance");
    solve_cmd->add_option("--max-iter", s_max_iter, "iteration cap");
    solve_cmd->add_option("--precision", s_precision, "significant digits (16 = double)");
    solve_cmd->add_option("--nodes", s_nodes, "hammerstein quadrature size");
    solve_cmd->add_option("--format", s_format, "markdown|csv|json");
    solve_cmd->add_flag("--verify-bounds", s_verify,
                        "check the per-step theorem bounds (needs --class/--c0/--c)");
    solve_cmd->add_option("--class", s_cls, "lipschitz|hoelder (with --verify-bounds)");
    solve_cmd->add_option("--c0", s_c0, "center constant (with --verify-bounds)");
    solve_cmd->add_option("--c", s_c, "full constant (with --verify-bounds)");
    solve_cmd->add_option("--q", s_q, "Hoelder exponent (with --verify-bounds)");
    s_ex->excludes(s_pf);

    // reproduce
    auto* repro = app.add_subcommand("reproduce", "compare computed radii with the published tables");
    std::string t_which = "all", t_format = "markdown";
    double t_rtol = 0.01;
    repro->add_option("--table", t_which, "1|2|3|all")->required();
    repro->add_option("--rtol", t_rtol, "relative tolerance per row");
    repro->add_option("--format", t_format, "markdown|csv|json");

    // estimate
    auto* est = app.add_subcommand("estimate", "sample continuity constants around x*");
    std::string e_example, e_problem, e_format = "markdown";
    double e_q = 1.0, e_radius = 0;
    int e_samples = 10000, e_nodes = 16;
    std::uint64_t e_seed = 0;
    auto* e_ex = est->add_option("--example", e_example, "logpoly|planck|hammerstein");
    auto* e_pf = est->add_option("--problem", e_problem, "problem-definition file");
    est->add_option("--q", e_q, "Hoelder exponent in (0,1]");
    est->add_option("--radius", e_radius, "sampling ball radius")->required();
    est->add_option("--samples", e_samples, "number of sampled pairs");
    est->add_option("--seed", e_seed, "RNG seed (estimates are deterministic per seed)")
        ->required();
    est->add_option("--nodes", e_nodes, "hammerstein quadrature size");
    est->add_option("--format", e_format, "markdown|csv|json");
    e_ex->excludes(e_pf);

    // order
    auto* order = app.add_subcommand("order", "computational order of convergence");
    std::string o_method, o_example, o_problem, o_x0, o_format = "markdown";
    int o_precision = 64, o_max_iter = 60;
    order->add_option("--method", o_method, "newton|fifth|seventh")->required();
    auto* o_ex = order->add_option("--example", o_example, "logpoly|planck|hammerstein");
    auto* o_pf = order->add_option("--problem", o_problem, "problem-definition file");
    order->add_option("--x0", o_x0, "initial iterate")->required();
    order->add_option("--precision", o_precision, "significant digits (>= 30)");
    order->add_option("--max-iter", o_max_iter, "iteration cap");
    order->add_option("--format", o_format, "markdown|csv|json");
    o_ex->excludes(o_pf);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (radius->parsed())
            return cmd_radius(r_cls, r_c0, r_c, r_q, r_tol, parse_format(r_format));
        if (solve_cmd->parsed()) {
            if (s_example.empty() && s_problem.empty())
                throw DomainError("need --example or --problem");
            return cmd_solve(s_method, ProblemSource{s_example, s_problem, s_nodes}, s_x0,
                             s_tol, s_max_iter, s_precision, parse_format(s_format),
                             s_verify, s_cls, s_c0, s_c, s_q);
        }
        if (repro->parsed()) return cmd_reproduce(t_which, t_rtol, parse_format(t_format));
        if (est->parsed()) {
            if (e_example.empty() && e_problem.empty())
                throw DomainError("need --example or --problem");
            return cmd_estimate(ProblemSource{e_example, e_problem, e_nodes}, e_q, e_radius,
                                e_samples, e_seed, parse_format(e_format));
        }
        if (order->parsed()) {
            if (o_example.empty() && o_problem.empty())
                throw DomainError("need --example or --problem");
            return cmd_order(o_method, ProblemSource{o_example, o_problem, 16}, o_x0,
                             o_precision, o_max_iter, parse_format(o_format));
        }
    } catch (const NoRootError& e) {
        std::cerr << "error: no convergence radius at index " << e.index() << ": " << e.what()
                  << "\n";
        return 3;
    } catch (const SingularJacobianError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const BallViolationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InsufficientDataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 7;
    } catch (const Error& e) {  // DomainError, ParseError, ArityError, Eval...
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
