#include "pontcalc/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <random>

using namespace pontcalc;
using boost::multiprecision::cpp_rational;

TEST_CASE("stored in lowest terms with positive denominator") {
    REQUIRE(Rational(6, 4) == Rational(3, 2));
    REQUIRE(Rational(2, -4).numerator() == -1);
    REQUIRE(Rational(2, -4).denominator() == 2);
    REQUIRE(Rational(0, 7).denominator() == 1);
    REQUIRE(Rational(-30, -18) == Rational(5, 3));
    REQUIRE_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("field operations") {
    Rational a(5, 3), b(-2, 7);
    REQUIRE(a + b == Rational(29, 21));
    REQUIRE(a - b == Rational(41, 21));
    REQUIRE(a * b == Rational(-10, 21));
    REQUIRE(a / b == Rational(-35, 6));
    REQUIRE_THROWS_AS(a / Rational(0), std::domain_error);
    REQUIRE(-a == Rational(-5, 3));
    REQUIRE(a.abs() == a);
    REQUIRE((-a).abs() == a);
    REQUIRE(Rational(1, 2) < Rational(2, 3));
    REQUIRE(Rational(-1, 2) > Rational(-2, 3));
}

TEST_CASE("arithmetic agrees with an independent bignum rational") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<long long> num(-5000, 5000);
    std::uniform_int_distribution<long long> den(1, 500);
    for (int t = 0; t < 500; ++t) {
        long long an = num(rng), ad = den(rng), bn = num(rng), bd = den(rng);
        Rational a(an, ad), b(bn, bd);
        cpp_rational ra(an, ad), rb(bn, bd);

        auto same = [](const Rational& x, const cpp_rational& y) {
            return x.numerator() == boost::multiprecision::numerator(y) &&
                   x.denominator() == boost::multiprecision::denominator(y);
        };
        REQUIRE(same(a + b, ra + rb));
        REQUIRE(same(a - b, ra - rb));
        REQUIRE(same(a * b, ra * rb));
        if (bn != 0)
            REQUIRE(same(a / b, ra / rb));
        REQUIRE((a < b) == (ra < rb));
    }
}

TEST_CASE("rational serialization") {
    REQUIRE(Rational(5, 3).to_string() == "5/3");
    REQUIRE(Rational(-21).to_string() == "-21");
    REQUIRE(Rational(-1, 45).to_string() == "-1/45");
    REQUIRE(Rational(0).to_string() == "0");

    REQUIRE(Rational::parse("5/3") == Rational(5, 3));
    REQUIRE(Rational::parse("-21") == Rational(-21));
    REQUIRE(Rational::parse("+7/2") == Rational(7, 2));
    REQUIRE(Rational::parse("6/4") == Rational(3, 2));
    REQUIRE_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    REQUIRE_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    REQUIRE_THROWS_AS(Rational::parse(""), std::invalid_argument);
    REQUIRE_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
}

TEST_CASE("binomial helper") {
    REQUIRE(binomial(5, 2) == 10);
    REQUIRE(binomial(17, 9) == 24310);
    REQUIRE(binomial(3, 5) == 0);
    REQUIRE(binomial(3, 0) == 1);
}
