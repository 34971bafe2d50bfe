#include <doctest.h>

#include <sstream>

#include "helpers.hpp"

using namespace fresco;
using testutil::Q;

TEST_CASE("rational construction reduces and normalizes the sign") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(2, 4).num() == 1);
    CHECK(Rational(2, 4).den() == 2);
    CHECK(Rational(3, -6).den() == 2);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational string round trip and display normalization") {
    CHECK(Q("-1/5").str() == "-1/5");
    CHECK(Q("4/2").str() == "2");
    CHECK(Q("7").str() == "7");
    CHECK(Rational(-8, 6).str() == "-4/3");
    CHECK_THROWS(Q("x"));
    CHECK_THROWS(Q("1/0"));
    std::ostringstream os;
    os << Rational(3, -9);
    CHECK(os.str() == "-1/3");
}

TEST_CASE("rational arithmetic round trip is exact") {
    testutil::Rng rng(1234);
    for (int i = 0; i < 300; ++i) {
        const Rational a = rng.rational(1000, 997);
        const Rational b = rng.rational(1000, 991);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("rational division by zero throws") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("floor and fractional part") {
    CHECK(Q("7/6").floor() == 1);
    CHECK(Q("7/6").frac() == Q("1/6"));
    CHECK(Q("-7/6").floor() == -2);
    CHECK(Q("-7/6").frac() == Q("5/6"));
    CHECK(Q("2").frac() == Q("0"));
    CHECK(Q("-4/5").frac() == Q("1/5"));
}

TEST_CASE("rational pow handles negative exponents") {
    CHECK(pow(Q("2/3"), 3) == Q("8/27"));
    CHECK(pow(Q("2/3"), -2) == Q("9/4"));
    CHECK(pow(Q("-2"), 3) == Q("-8"));
    CHECK(pow(Q("5/7"), 0) == Q("1"));
}
