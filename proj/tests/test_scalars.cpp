#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <limits>

#include "dopk/bigfloat.hpp"
#include "dopk/io.hpp"
#include "dopk/rational.hpp"

#include "testutil.hpp"

using namespace dopk;

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, -2).denominator() == 2);
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic is exact") {
    testutil::Rng rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const Rational a = rng.rational(-1000, 1000, 97);
        const Rational b = rng.rational(-1000, 1000, 97);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("rational construction at the long long extremes") {
    const long long lo = std::numeric_limits<long long>::min();
    const long long hi = std::numeric_limits<long long>::max();
    CHECK(Rational(lo) + Rational(hi) == Rational(-1));
    CHECK(Rational(hi) - Rational(hi) == Rational(0));
    CHECK(Rational(lo, 2) * Rational(2) == Rational(lo));
    CHECK(Rational(lo).to_string() == std::to_string(lo));
    CHECK(Rational(hi).to_string() == std::to_string(hi));
}

TEST_CASE("rational helpers") {
    CHECK(pow_int(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow_int(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(pow_int(Rational(5), 0) == Rational(1));
    CHECK(factorial(0) == Rational(1));
    CHECK(factorial(5) == Rational(120));
    CHECK(binomial(6, 2) == Rational(15));
    CHECK(binomial(3, 5) == Rational(0));
    CHECK(Rational(-7, 3).is_integer() == false);
    CHECK(Rational(-6, 3).is_nonpositive_integer());
    CHECK(Rational(0).is_nonpositive_integer());
    CHECK_FALSE(Rational(2).is_nonpositive_integer());
    CHECK(abs(Rational(-5, 2)) == Rational(5, 2));
    CHECK(Rational(-9, 4).sign() == -1);
}

TEST_CASE("rational string round trips") {
    const char* cases[] = {"0", "-1", "5", "1/3", "-22/7", "123456789123456789/1000000007"};
    for (const char* s : cases) {
        const Rational r = parse_rational(s);
        CHECK(r.to_string() == s);
        CHECK(parse_rational(r.to_string()) == r);
    }
}

TEST_CASE("rational parsing of decimals and fractions") {
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("-0.5") == Rational(-1, 2));
    CHECK(parse_rational("2.5e-3") == Rational(1, 400));
    CHECK(parse_rational("1e3") == Rational(1000));
    CHECK(parse_rational("  7/2 ") == Rational(7, 2));
    CHECK(parse_rational("-2/4") == Rational(-1, 2));
    CHECK(parse_rational(".5") == Rational(1, 2));
    CHECK_THROWS_AS(parse_rational(""), parse_error);
    CHECK_THROWS_AS(parse_rational("abc"), parse_error);
    CHECK_THROWS_AS(parse_rational("1.2.3"), parse_error);
    CHECK_THROWS_AS(parse_rational("1e"), parse_error);
    CHECK_THROWS_AS(parse_rational("1/0"), std::domain_error);
    CHECK_THROWS_AS(parse_rational("0.5/2"), parse_error);
}

TEST_CASE("bigfloat precision control") {
    CHECK(BigFloat::default_precision() == 256);
    CHECK(BigFloat().precision() == 256);
    CHECK_THROWS_AS(BigFloat::set_default_precision(10), std::invalid_argument);
    BigFloat::set_default_precision(128);
    CHECK(BigFloat(Rational(1, 3)).precision() == 128);
    BigFloat::set_default_precision(256);
}

TEST_CASE("bigfloat arithmetic and ordering") {
    const BigFloat a(Rational(1, 3));
    const BigFloat b(Rational(1, 6));
    CHECK(a + b < BigFloat(1));
    CHECK(b < a);
    // Dyadic values are exact at any binary precision.
    const BigFloat half(Rational(1, 2));
    CHECK(half + half == BigFloat(1));
    CHECK(half * BigFloat(4) == BigFloat(2));
    CHECK(sqrt(BigFloat(Rational(1, 4))) == half);
    CHECK(abs(-half) == half);
    CHECK((-half).sign() == -1);
    CHECK(BigFloat().is_zero());
    CHECK_THROWS_AS(half / BigFloat(0L), std::domain_error);
    CHECK_THROWS_AS(sqrt(-half), std::domain_error);
}

TEST_CASE("bigfloat tracks the wider operand precision") {
    const BigFloat wide(Rational(1, 3), 512);
    const BigFloat narrow(Rational(1, 5), 64);
    CHECK((wide + narrow).precision() == 512);
    CHECK((narrow * wide).precision() == 512);
}
