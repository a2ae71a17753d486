#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "convball/bigfloat.hpp"
#include "convball/expr.hpp"
#include "convball/problem_file.hpp"
#include "convball/solvers.hpp"

using namespace convball;
using Catch::Approx;

TEST_CASE("scalar expression evaluation and differentiation") {
    auto op = parse_system<double>("x1^2 - 1");
    CHECK(op.dimension == 1);
    CHECK(op.evaluate({2.0})[0] == Approx(3.0).epsilon(1e-15));
    CHECK(op.jacobian({2.0})(0, 0) == Approx(4.0).epsilon(1e-15));

    auto planck = parse_system<double>("exp(-x1) - 1 + x1/5");
    CHECK(std::abs(planck.evaluate({4.965114})[0]) < 1e-6);
    CHECK(planck.jacobian({4.965114})(0, 0) == Approx(0.193023).margin(1e-5));
}

TEST_CASE("precedence and associativity") {
    auto op = parse_system<double>("2*x1^2 + 1");  // ^ binds above *
    CHECK(op.evaluate({3.0})[0] == Approx(19.0).epsilon(1e-15));

    auto right = parse_system<double>("x1^3^2");  // right-assoc: x^(3^2) = x^9
    CHECK(right.evaluate({2.0})[0] == Approx(512.0).epsilon(1e-15));

    auto negpow = parse_system<double>("-x1^2");  // ^ binds above unary minus
    CHECK(negpow.evaluate({3.0})[0] == Approx(-9.0).epsilon(1e-15));

    auto negexp = parse_system<double>("x1^-2");  // unary exponent
    CHECK(negexp.evaluate({2.0})[0] == Approx(0.25).epsilon(1e-15));

    auto mixed = parse_system<double>("1 - 2 - 3");  // left-assoc
    CHECK(mixed.evaluate({0.0})[0] == Approx(-4.0).epsilon(1e-15));
}

TEST_CASE("negative bases with integer exponents") {
    auto op = parse_system<double>("x1^3");
    CHECK(op.evaluate({-2.0})[0] == Approx(-8.0).epsilon(1e-15));
    CHECK(op.jacobian({-2.0})(0, 0) == Approx(12.0).epsilon(1e-15));

    auto frac = parse_system<double>("x1^2.5");
    CHECK(frac.evaluate({4.0})[0] == Approx(32.0).epsilon(1e-14));
    REQUIRE_THROWS_AS(frac.evaluate({-1.0}), EvalDomainError);
}

TEST_CASE("evaluation domain errors") {
    REQUIRE_THROWS_AS(parse_system<double>("log(x1)").evaluate({-1.0}), EvalDomainError);
    REQUIRE_THROWS_AS(parse_system<double>("log(x1)").evaluate({0.0}), EvalDomainError);
    REQUIRE_THROWS_AS(parse_system<double>("sqrt(x1)").evaluate({-4.0}), EvalDomainError);
    REQUIRE_THROWS_AS(parse_system<double>("1/x1").evaluate({0.0}), EvalDomainError);
    REQUIRE_THROWS_AS(parse_system<double>("x1^-1").evaluate({0.0}), EvalDomainError);
    CHECK(parse_system<double>("sqrt(x1)").evaluate({4.0})[0] == 2.0);
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_expressions("x1 + @");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
    }
    REQUIRE_THROWS_AS(parse_expressions("(x1 + 1"), ParseError);
    REQUIRE_THROWS_AS(parse_expressions("x1 +"), ParseError);
    REQUIRE_THROWS_AS(parse_expressions("foo(x1)"), ParseError);   // unknown function
    REQUIRE_THROWS_AS(parse_expressions("x1 * y"), ParseError);    // unknown identifier
    REQUIRE_THROWS_AS(parse_expressions("x1 x1"), ParseError);     // trailing input
}

TEST_CASE("arity errors") {
    // x3 referenced in a 2-equation system
    REQUIRE_THROWS_AS(parse_expressions("x1 + x3; x2"), ArityError);
    // explicit variable list with mismatched equation count
    REQUIRE_THROWS_AS(parse_expressions("a + b", {"a", "b"}), ArityError);
    REQUIRE_NOTHROW(parse_expressions("a + b; a - b", {"a", "b"}));
}

TEST_CASE("multi-dimensional system with exact Jacobian") {
    auto op = parse_system<double>("x1^2 + x2 - 3; sin(x1) * x2");
    CHECK(op.dimension == 2);
    const auto j = op.jacobian({1.5, 2.0});
    CHECK(j(0, 0) == Approx(3.0).epsilon(1e-15));
    CHECK(j(0, 1) == Approx(1.0).epsilon(1e-15));
    CHECK(j(1, 0) == Approx(2.0 * std::cos(1.5)).epsilon(1e-14));
    CHECK(j(1, 1) == Approx(std::sin(1.5)).epsilon(1e-14));
}

TEST_CASE("pretty-printed systems reparse to the same operator") {
    const char* sources[] = {
        "x1^2 - 1",
        "exp(-x1) - 1 + x1/5",
        "x1^2 + x2 - 3; sin(x1)*cos(x2) - x2/7",
        "sqrt(x1 + 3) * log(x2 + 2) - 1; -x1 + 2^x2",
    };
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> unif(0.2, 1.8);
    for (const char* src : sources) {
        const ParsedSystem sys = parse_expressions(src);
        const ParsedSystem round = parse_expressions(sys.pretty());
        auto a = make_operator<double>(sys);
        auto b = make_operator<double>(round);
        for (int k = 0; k < 20; ++k) {
            Vector<double> x(a.dimension);
            for (auto& v : x) v = unif(rng);
            const auto fa = a.evaluate(x), fb = b.evaluate(x);
            for (std::size_t i = 0; i < fa.size(); ++i)
                REQUIRE(fa[i] == Approx(fb[i]).margin(1e-14).epsilon(1e-14));
        }
    }
}

TEST_CASE("expression operators run on the extended-precision backend") {
    BigFloat::PrecisionGuard guard(64);
    auto op = parse_system<BigFloat>("exp(-x1) - 1 + x1/5");
    // literals are re-read at full precision: x1/5 is exact, not double(0.2)
    const BigFloat x = real_from_literal<BigFloat>("4.965114231744276303698759131");
    CHECK(abs(op.evaluate({x})[0]) < BigFloat(1e-25));
    const auto trace = solve(IterationMethod::SeventhOrder, op, {BigFloat(4.3)},
                             SolveConfig{1e-40, 30, 64});
    CHECK(trace.converged);
}

TEST_CASE("problem files") {
    const std::string path = "/tmp/convball_test_problem.json";
    {
        std::ofstream out(path);
        out << R"({"variables": ["u", "v"],
                   "equations": ["u^2 + v - 3", "u - v"],
                   "root": [1.3027756377319946, 1.3027756377319946],
                   "domain_radius": 5.0})";
    }
    const ProblemFile pf = load_problem_file(path);
    CHECK(pf.variables.size() == 2);
    auto op = make_problem<double>(pf);
    REQUIRE(op.known_root.has_value());
    CHECK(std::abs(op.evaluate(*op.known_root)[0]) < 1e-12);  // root polished at load
    CHECK(op.contains({1.0, 1.0}));
    CHECK_FALSE(op.contains({7.0, 1.0}));

    const auto trace = solve(IterationMethod::SeventhOrder, op, {1.0, 1.0}, SolveConfig{});
    CHECK(trace.converged);
    CHECK(to_double(*trace.final_error) < 1e-12);

    // malformed inputs
    {
        std::ofstream out(path);
        out << R"({"variables": ["u"], "equations": ["u", "u"]})";
    }
    REQUIRE_THROWS_AS(load_problem_file(path), ArityError);
    {
        std::ofstream out(path);
        out << "not json";
    }
    REQUIRE_THROWS_AS(load_problem_file(path), ParseError);
    {
        std::ofstream out(path);
        out << R"({"variables": ["u"], "equations": ["u^2 - 2"], "root": [3.0]})";
    }
    REQUIRE_THROWS_AS(make_problem<double>(load_problem_file(path)), DomainError);
    REQUIRE_THROWS_AS(load_problem_file("/nonexistent/file.json"), DomainError);
}
