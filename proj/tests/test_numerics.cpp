#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "maxbv/rational.hpp"
#include "maxbv/search.hpp"
#include "test_support.hpp"

using namespace maxbv;
using maxbv::testing::Q;

TEST_CASE("rational_parse accepts integers, fractions and decimals") {
    CHECK(Rational::parse("2/3") == Rational(2, 3));
    CHECK(Rational::parse("-0.5") == Rational(-1, 2));
    CHECK(Rational::parse("0.75") == Rational(3, 4));
    CHECK(Rational::parse("-12") == Rational(-12));
    CHECK(Rational::parse("6/4").str() == "3/2");
    CHECK(Rational::parse("-0/5").is_zero());
}

TEST_CASE("rational_parse rejects malformed input") {
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.2.3"), ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
    CHECK_THROWS_AS(Rational::parse(".5"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1e3"), ParseError);
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic is exact: associativity and distributivity") {
    maxbv::testing::TestRng rng(7);
    for (int i = 0; i < 200; ++i) {
        const Rational a = rng.rational(-1000, 1000, rng.integer(1, 97));
        const Rational b = rng.rational(-1000, 1000, rng.integer(1, 97));
        const Rational c = rng.rational(-1000, 1000, rng.integer(1, 97));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("decimal rendering") {
    CHECK(Rational(1, 3).to_decimal() == "0.33333333333333333");
    CHECK(Rational(2, 3).to_decimal() == "0.66666666666666667");
    CHECK(Rational(-1, 2).to_decimal() == "-0.5");
    CHECK(Rational(5, 29).to_decimal() == "0.17241379310344828");
    CHECK(Rational(12345).to_decimal() == "12345");
    CHECK(Rational(0).to_decimal() == "0");
    CHECK(Rational(1, 1000000).to_decimal() == "1e-06");
    CHECK(Rational(99999, 100000).to_decimal(3) == "1");
    CHECK(dyadic(40).to_decimal(3) == "9.09e-13");
}

TEST_CASE("extended rationals order infinities around finite values") {
    const ExtendedRational lo = ExtendedRational::neg_inf();
    const ExtendedRational hi = ExtendedRational::pos_inf();
    const ExtendedRational mid = Q("-1000000/3");
    CHECK(lo < mid);
    CHECK(mid < hi);
    CHECK(lo < hi);
    CHECK(hi == ExtendedRational::pos_inf());
    CHECK(ExtendedRational(Q("1/2")) < ExtendedRational(Q("2/3")));
    CHECK(hi.str() == "inf");
    CHECK_THROWS_AS((void)hi.value(), std::logic_error);
}

TEST_CASE("bisect_sign_change") {
    SUBCASE("linear root") {
        const auto br = bisect_sign_change([](const Rational& x) { return x - Q("1/2"); }, 0, 1, 20);
        CHECK(abs(br.midpoint() - Q("1/2")) <= dyadic(21));
        CHECK(br.width() == dyadic(20));
    }
    SUBCASE("two halvings") {
        const auto br = bisect_sign_change([](const Rational& x) { return x; }, -1, 3, 2);
        CHECK(br.width() == 1);
        CHECK(br.lo <= 0);
        CHECK(br.hi >= 0);
    }
    SUBCASE("equal signs") {
        CHECK_THROWS_AS(bisect_sign_change([](const Rational&) { return Rational(1); }, 0, 1), std::invalid_argument);
    }
    SUBCASE("bracket always keeps a sign change") {
        maxbv::testing::TestRng rng(3);
        for (int i = 0; i < 50; ++i) {
            const Rational root = rng.rational(-500, 500, 101);
            auto g = [&](const Rational& x) { return (x - root) * (x - root) * (x - root); };
            const auto br = bisect_sign_change(g, -7, 9, static_cast<unsigned>(rng.integer(1, 40)));
            CHECK(g(br.lo).sign() * g(br.hi).sign() <= 0);
            CHECK(g(br.lo).sign() != 0);
        }
    }
}

TEST_CASE("minimize_unimodal") {
    SUBCASE("absolute value") {
        const auto m = minimize_unimodal([](const Rational& x) { return abs(x - Q("1/4")); }, 0, 1, 30);
        CHECK(abs(m.argmin - Q("1/4")) < Q("1/100000"));
    }
    SUBCASE("constant") {
        const auto m = minimize_unimodal([](const Rational&) { return Q("3/7"); }, 0, 1, 10);
        CHECK(m.min == Q("3/7"));
        CHECK(m.argmin >= 0);
        CHECK(m.argmin <= 1);
    }
    SUBCASE("monotone approaches the left end") {
        const auto m = minimize_unimodal([](const Rational& x) { return x; }, 0, 1, 30);
        CHECK(m.argmin < Q("1/10000"));
    }
    SUBCASE("empty interval") {
        CHECK_THROWS_AS(minimize_unimodal([](const Rational& x) { return x; }, 1, 1), std::invalid_argument);
    }
    SUBCASE("recovers random minimizers at the stated rate") {
        maxbv::testing::TestRng rng(11);
        const unsigned depth = 40;
        Rational rate = 1;
        for (unsigned i = 0; i < depth; ++i) rate *= Q("2/3");
        for (int i = 0; i < 100; ++i) {
            const Rational target = rng.rational(0, 997, 997);
            const auto m = minimize_unimodal([&](const Rational& x) { return abs(x - target); }, 0, 1, depth);
            CHECK(abs(m.argmin - target) <= rate);
        }
    }
}
