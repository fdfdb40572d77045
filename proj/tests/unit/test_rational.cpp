#include <doctest.h>

#include "mvpav/rational.hpp"

using namespace mvpav;

TEST_CASE("rationals stay reduced and inside the unit interval") {
    Rational01 r(6, 10);
    CHECK(r.str() == "3/5");
    CHECK(Rational01(0, 7).str() == "0");
    CHECK(Rational01(7, 7).str() == "1");
    CHECK_THROWS_AS(Rational01(11, 10), Error);
    CHECK_THROWS_AS(Rational01(1, 0), Error);
    CHECK(Rational01::parse("2/4") == Rational01(1, 2));
    CHECK(Rational01::parse("1") == Rational01::one());
    CHECK_THROWS_AS(Rational01::parse("3/2"), Error);
}

TEST_CASE("standard algebra operations") {
    Rational01 x(7, 10), y(6, 10);
    CHECK(mv_odot(x, y) == Rational01(3, 10));
    CHECK(mv_impl(x, y) == Rational01(9, 10));
    CHECK(mv_impl(y, x) == Rational01::one());
    CHECK(mv_oplus(x, y) == Rational01::one());
    CHECK(mv_neg(x) == Rational01(3, 10));
    CHECK(mv_prod(Rational01(1, 2), Rational01(1, 3)) == Rational01(1, 6));
    CHECK(mv_div(Rational01(1, 2), 3) == Rational01(1, 6));
    CHECK(mv_multiple(3, Rational01(1, 2)) == Rational01::one());
    CHECK(mv_multiple(0, x) == Rational01::zero());
}

TEST_CASE("derived operation identities on samples") {
    // x -> y = !x (+) y and x (+) y = !(!x & !y)
    for (long a = 0; a <= 10; ++a)
        for (long b = 0; b <= 10; ++b) {
            Rational01 x(a, 10), y(b, 10);
            CHECK(mv_impl(x, y) == mv_oplus(mv_neg(x), y));
            CHECK(mv_oplus(x, y) == mv_neg(mv_odot(mv_neg(x), mv_neg(y))));
        }
}
