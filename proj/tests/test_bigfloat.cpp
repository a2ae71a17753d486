#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "convball/bigfloat.hpp"
#include "convball/real.hpp"

using namespace convball;
using Catch::Approx;

TEST_CASE("construction and narrowing") {
    BigFloat a(1.5);
    CHECK(a.to_double() == 1.5);
    CHECK(to_double(a) == 1.5);
    BigFloat b(-3L);
    CHECK(b.to_double() == -3.0);
    CHECK(BigFloat().to_double() == 0.0);
}

TEST_CASE("arithmetic and comparisons") {
    BigFloat a(2.0), b(0.5);
    CHECK((a + b).to_double() == 2.5);
    CHECK((a - b).to_double() == 1.5);
    CHECK((a * b).to_double() == 1.0);
    CHECK((a / b).to_double() == 4.0);
    CHECK((-a).to_double() == -2.0);
    CHECK(a > b);
    CHECK(b < a);
    CHECK(a >= a);
    CHECK(a <= a);
    CHECK(a == BigFloat(2.0));
    CHECK(a != b);
    CHECK(abs(BigFloat(-7.0)).to_double() == 7.0);
}

TEST_CASE("decimal parsing keeps digits beyond double precision") {
    BigFloat::PrecisionGuard guard(64);
    const BigFloat third = real_from_literal<BigFloat>("0.3333333333333333333333333333333333");
    const BigFloat err = abs(third - BigFloat(1.0) / BigFloat(3.0));
    CHECK(err < BigFloat(1e-33));
    CHECK(err > BigFloat(0.0));  // the literal is truncated, not exact
    REQUIRE_THROWS_AS(BigFloat::from_string("zz"), DomainError);
}

TEST_CASE("transcendentals at 64 digits") {
    BigFloat::PrecisionGuard guard(64);
    const BigFloat x(1.75);
    CHECK(abs(log(exp(x)) - x) < BigFloat(1e-60));
    CHECK(abs(sqrt(x) * sqrt(x) - x) < BigFloat(1e-60));
    const BigFloat s = sin(x), c = cos(x);
    CHECK(abs(s * s + c * c - BigFloat(1.0)) < BigFloat(1e-60));
    CHECK(abs(pow(x, BigFloat(3.0)) - x * x * x) < BigFloat(1e-58));
    // e to 30 places: 2.718281828459045235360287471352...
    const BigFloat e = exp(BigFloat(1.0));
    const BigFloat eref = real_from_literal<BigFloat>("2.718281828459045235360287471352662497757");
    CHECK(abs(e - eref) < BigFloat(1e-38));
}

TEST_CASE("epsilon scales with the precision guard") {
    const double eps64 = [] {
        BigFloat::PrecisionGuard guard(64);
        return eps_of(BigFloat(1.0)).to_double();
    }();
    const double eps32 = [] {
        BigFloat::PrecisionGuard guard(32);
        return eps_of(BigFloat(1.0)).to_double();
    }();
    CHECK(eps64 < 1e-60);
    CHECK(eps64 > 1e-70);
    CHECK(eps32 < 1e-30);
    CHECK(eps32 > eps64);
}

TEST_CASE("results widen to the larger operand precision") {
    BigFloat::PrecisionGuard g64(64);
    BigFloat wide(1.0);
    const BigFloat narrow = [] {
        BigFloat::PrecisionGuard g20(20);
        return BigFloat(3.0);
    }();
    CHECK(narrow.precision() < wide.precision());
    const BigFloat sum = narrow + wide;
    CHECK(sum.precision() == wide.precision());
    const BigFloat sum2 = wide + narrow;
    CHECK(sum2.precision() == wide.precision());
}

TEST_CASE("printing") {
    BigFloat::PrecisionGuard guard(40);
    CHECK(BigFloat(1.0).str(6) == "1.00000e+00");
    CHECK(real_from_literal<BigFloat>("12345.678").str(8).substr(0, 9) == "1.2345678");
}
