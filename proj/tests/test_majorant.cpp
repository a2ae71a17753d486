#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "convball/majorant.hpp"
#include "convball/root_search.hpp"

using namespace convball;
using Catch::Approx;

namespace {

ContinuityConstants lip(double c0, double c) { return ContinuityConstants::lipschitz(c0, c); }
ContinuityConstants hoe(double c0, double c, double q) {
    return ContinuityConstants::hoelder(c0, c, q);
}

}  // namespace

TEST_CASE("constants validation") {
    REQUIRE_THROWS_AS(lip(2.0, 1.0), DomainError);           // center > full
    REQUIRE_THROWS_AS(lip(-1.0, 1.0), DomainError);
    REQUIRE_THROWS_AS(lip(0.0, 1.0), DomainError);
    REQUIRE_THROWS_AS(hoe(1.0, 1.0, 0.0), DomainError);      // q out of (0,1]
    REQUIRE_THROWS_AS(hoe(1.0, 1.0, 1.5), DomainError);
    REQUIRE_NOTHROW(hoe(1.0, 1.0, 1.0));
    REQUIRE_NOTHROW(lip(0.5, 1.0));
}

TEST_CASE("domain limit") {
    CHECK(domain_limit(lip(1.0, 1.0)) == 1.0);
    CHECK(domain_limit(hoe(4.0, 4.0, 0.5)) == Approx(0.0625).epsilon(1e-14));
    CHECK(domain_limit(lip(96.6628, 96.6628)) == Approx(0.0103452).epsilon(1e-5));
}

TEST_CASE("p evaluation") {
    CHECK(eval_p(lip(1.0, 1.0), 0.0) == 0.0);
    // eta1(0.2) = (0.1 + 1.1/2)/0.8 = 0.8125, p = 1 * 0.8125 * 0.2
    CHECK(eval_p(lip(1.0, 1.0), 0.2) == Approx(0.1625).epsilon(1e-14));
    CHECK(eval_p(hoe(1.0, 1.0, 1.0), 0.2) == Approx(0.1625).epsilon(1e-14));
}

TEST_CASE("majorant values") {
    CHECK(eval_majorant(lip(1.0, 1.0), 1, 0.0) == Approx(0.5).epsilon(1e-15));
    CHECK(eval_majorant(lip(1.0, 1.0), 1, 0.2) == Approx(0.8125).epsilon(1e-14));

    const auto c1 = lip(96.6628, 96.6628);
    CHECK(eval_majorant(c1, 1, 0.00295578) == Approx(1.0).margin(1e-4));
    CHECK(eval_majorant(c1, 1, 0.001) == Approx(0.633757914541768).epsilon(1e-12));

    // q = 1 specialization reproduces the Lipschitz value exactly (two code paths)
    const auto h1 = hoe(96.6628, 96.6628, 1.0);
    CHECK(eval_majorant(h1, 3, 0.001) ==
          Approx(eval_majorant(c1, 3, 0.001)).margin(1e-12));

    REQUIRE_THROWS_AS(eval_majorant(lip(1.0, 1.0), 5, 0.1), DomainError);
    REQUIRE_THROWS_AS(eval_majorant(lip(1.0, 1.0), 1, -0.1), DomainError);
}

TEST_CASE("gap values") {
    CHECK(eval_gap(lip(1.0, 1.0), 1, 0.0) == Approx(-0.5).epsilon(1e-15));
    CHECK(eval_gap(lip(1.0, 1.0), 2, 0.0) == Approx(-1.0).epsilon(1e-15));
    const auto c1 = lip(96.6628, 96.6628);
    CHECK(eval_gap(c1, 1, 0.00295578) == Approx(0.0).margin(1e-4));
}

TEST_CASE("pole handling") {
    const auto c = lip(1.0, 1.0);
    REQUIRE_THROWS_AS(eval_majorant(c, 1, 1.0), DomainError);   // 1 - psi0*a = 0
    REQUIRE_THROWS_AS(eval_majorant(c, 1, 1.5), DomainError);
    REQUIRE_NOTHROW(eval_majorant(c, 1, 0.999));
}

TEST_CASE("closed-form rho1") {
    CHECK(rho1_closed_form(lip(1.0, 1.0)) == Approx(2.0 / 7.0).epsilon(1e-15));
    // published table values
    CHECK(rho1_closed_form(lip(96.6628, 96.6628)) == Approx(0.00295578).epsilon(1e-5));
    CHECK(rho1_closed_form(hoe(0.0608658, 0.094888, 1.0)) == Approx(4.04772).epsilon(1e-5));
    const double k3 = 0.125 * (2.5 * std::sqrt(2.0) + 1.0);
    CHECK(rho1_closed_form(hoe(k3, k3, 1.0)) == Approx(0.503957).epsilon(1e-5));
    // rho1 sits strictly inside the interval
    CHECK(rho1_closed_form(lip(1.0, 1.0)) < domain_limit(lip(1.0, 1.0)));
}

TEST_CASE("hoelder bounds") {
    const auto b0 = hoelder_bounds(hoe(1.0, 1.0, 1.0), 0.0, 0.5);
    CHECK(b0.op_norm == 1.0);
    CHECK(b0.segment == 1.0);
    CHECK(b0.value == 0.0);

    const auto b1 = hoelder_bounds(hoe(1.0, 1.0, 1.0), 0.5, 1.0);
    CHECK(b1.op_norm == Approx(1.5).epsilon(1e-15));
    CHECK(b1.segment == Approx(1.5).epsilon(1e-15));
    CHECK(b1.value == Approx(0.625).epsilon(1e-15));

    const auto b2 = hoelder_bounds(hoe(4.0, 4.0, 0.5), 0.25, 0.0);
    CHECK(b2.op_norm == Approx(3.0).epsilon(1e-14));
    CHECK(b2.segment == Approx(1.0).epsilon(1e-14));
    CHECK(b2.value == Approx(0.25 * (1.0 + 4.0 / 1.5 * 0.5)).epsilon(1e-14));

    // Lipschitz delegates with q = 1
    const auto bl = hoelder_bounds(lip(1.0, 2.0), 0.5, 1.0);
    CHECK(bl.op_norm == Approx(1.5).epsilon(1e-15));

    REQUIRE_THROWS_AS(hoelder_bounds(hoe(1.0, 1.0, 1.0), -0.1, 0.5), DomainError);
    REQUIRE_THROWS_AS(hoelder_bounds(hoe(1.0, 1.0, 1.0), 0.1, 1.5), DomainError);
}

TEST_CASE("typography reconciliation: psi*(a + eta1*a) == psi*(1 + eta1)*a") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double psi0 = 0.5 + 2.0 * unif(rng);
        const double psi = psi0 * (1.0 + unif(rng));
        const auto c = lip(psi0, psi);
        const double a = 0.9 * rho1_closed_form(c) * unif(rng);
        const double e1 = eval_majorant(c, 1, a);
        CHECK(psi * (a + e1 * a) == Approx(psi * (1.0 + e1) * a).epsilon(1e-14));
    }
}

TEST_CASE("q=1 specialization identity over random constants") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double c0 = std::exp(std::log(0.05) + unif(rng) * std::log(50.0 / 0.05));
        const double cf = c0 * (1.0 + 2.0 * unif(rng));
        const auto cl = lip(c0, cf);
        const auto ch = hoe(c0, cf, 1.0);
        const RadiusReport rep = radius_report(cl);
        for (int k = 0; k < 20; ++k) {
            const double a = rep.rho_min * (0.999 * (k + 1) / 20.0);
            for (int i = 1; i <= 4; ++i)
                REQUIRE(std::abs(eval_majorant(cl, i, a) - eval_majorant(ch, i, a)) < 1e-12);
            REQUIRE(std::abs(eval_p(cl, a) - eval_p(ch, a)) < 1e-12);
        }
    }
}

TEST_CASE("majorants increase strictly on [0, rho_i)") {
    for (const auto& c : {lip(96.6628, 96.6628), hoe(0.0608658, 0.094888, 1.0),
                          hoe(2.0, 3.0, 0.6)}) {
        const RadiusReport rep = radius_report(c);
        for (int i = 1; i <= 4; ++i) {
            double prev = eval_majorant(c, i, 0.0);
            for (int k = 1; k <= 40; ++k) {
                const double a = rep.rho[i - 1] * 0.999 * k / 40.0;
                const double v = eval_majorant(c, i, a);
                REQUIRE(v > prev);
                prev = v;
            }
        }
    }
}
