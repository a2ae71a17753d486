#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "convball/errors.hpp"
#include "convball/expr.hpp"
#include "convball/linalg.hpp"
#include "convball/operator_spec.hpp"

// Problem-definition files: a JSON document with fields
//   variables     : list of variable names
//   equations     : list of expression strings (same count)
//   root          : optional list of numbers (a root of the system)
//   domain_radius : optional positive number (sup-norm ball around the root,
//                   or around the origin when no root is given)

namespace convball {

struct ProblemFile {
    std::vector<std::string> variables;
    std::vector<std::string> equations;
    std::optional<std::vector<double>> root;
    std::optional<double> domain_radius;
};

inline ProblemFile parse_problem_json(const nlohmann::json& j) {
    ProblemFile p;
    if (!j.is_object() || !j.contains("variables") || !j.contains("equations"))
        throw DomainError("problem file must be an object with 'variables' and 'equations'");
    for (const auto& v : j.at("variables")) p.variables.push_back(v.get<std::string>());
    for (const auto& e : j.at("equations")) p.equations.push_back(e.get<std::string>());
    if (p.variables.empty()) throw DomainError("problem file declares no variables");
    if (p.variables.size() != p.equations.size())
        throw ArityError("problem file has " + std::to_string(p.equations.size()) +
                         " equations but " + std::to_string(p.variables.size()) +
                         " variables");
    if (j.contains("root")) {
        std::vector<double> r;
        for (const auto& v : j.at("root")) r.push_back(v.get<double>());
        if (r.size() != p.variables.size())
            throw ArityError("'root' length does not match the variable count");
        p.root = std::move(r);
    }
    if (j.contains("domain_radius")) {
        p.domain_radius = j.at("domain_radius").get<double>();
        if (!(*p.domain_radius > 0.0)) throw DomainError("'domain_radius' must be positive");
    }
    return p;
}

inline ProblemFile load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open problem file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("problem file is not valid JSON: ") + e.what());
    }
    return parse_problem_json(j);
}

/// Build the operator a problem file describes.  A declared root is accepted
/// if its residual is below 1e-6 and is then polished by Newton so the stored
/// root satisfies the usual residual <= 1e-12 contract even when the file
/// carries a hand-rounded value.
template <class Real>
OperatorSpec<Real> make_problem(const ProblemFile& p) {
    std::string joined;
    for (std::size_t i = 0; i < p.equations.size(); ++i) {
        if (i) joined += "; ";
        joined += p.equations[i];
    }
    OperatorSpec<Real> op = make_operator<Real>(parse_expressions(joined, p.variables));

    if (p.root) {
        Vector<Real> x(p.root->size());
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = Real((*p.root)[i]);
        if (to_double(sup_norm(op.evaluate(x))) > 1e-6)
            throw DomainError("declared root has residual above 1e-6");
        for (int k = 0; k < 64; ++k) {
            const Vector<Real> fx = op.evaluate(x);
            LuFactor<Real> lu(op.jacobian(x), "T'(root)");
            const Vector<Real> step = lu.solve(fx);
            x = vec_sub(x, step);
            if (sup_norm(step) <= Real(4.0) * eps_of(Real(1.0)) * (Real(1.0) + sup_norm(x)))
                break;
        }
        op.known_root = x;
        if (p.domain_radius) op.domain = Ball<Real>::around(x, Real(*p.domain_radius));
    } else if (p.domain_radius) {
        op.domain = Ball<Real>::around(Vector<Real>(op.dimension, Real(0.0)),
                                       Real(*p.domain_radius));
    }
    return op;
}

}  // namespace convball
