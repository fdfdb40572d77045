#include <doctest.h>

#include "mvpav/errors.hpp"
#include "mvpav/eval.hpp"
#include "mvpav/parse.hpp"

using namespace mvpav;

namespace {
const LogicProfile kAll = LogicProfile::all();
const LogicProfile kBase = LogicProfile::base();

Valuation val(std::initializer_list<std::pair<const char*, Rational01>> vs) {
    Valuation v;
    for (const auto& [n, x] : vs) v.set(n, x);
    return v;
}
}  // namespace

TEST_CASE("exact evaluation of the gated connectives") {
    CHECK(eval(parse("p & q", kBase),
               val({{"p", Rational01(7, 10)}, {"q", Rational01(6, 10)}}),
               kBase) == Rational01(3, 10));
    CHECK(eval(parse("p -> p", kBase), val({{"p", Rational01(3, 7)}}),
               kBase) == Rational01::one());
    CHECK(eval(parse("d3(p)", kAll), val({{"p", Rational01(1, 2)}}), kAll) ==
          Rational01(1, 6));
    CHECK(eval(parse("[1/2] * [1/3]", kAll), Valuation{}, kAll) ==
          Rational01(1, 6));
    CHECK(eval(parse("K", kAll), Valuation{}, kAll) == Rational01::half());
    CHECK(eval(parse("!K", kAll), Valuation{}, kAll) == Rational01::half());
}

TEST_CASE("eval error paths") {
    CHECK_THROWS_AS(eval(parse("p", kBase), Valuation{}, kBase), EvalError);
    Formula f = parse("p * q", kAll);
    CHECK_THROWS_AS(eval(f,
                         val({{"p", Rational01::one()},
                              {"q", Rational01::one()}}),
                         kBase),
                    ProfileError);
}

TEST_CASE("finite chain evaluation") {
    // the 5-element chain has denominator 4
    FiniteChain l5 = FiniteChain::with_size(5);
    CHECK(l5.odot(3, 2) == 1);  // 3/4 (.) 2/4 = 1/4
    FiniteChain l2 = FiniteChain::with_size(2);
    CHECK(l2.impl(1, 0) == 0);  // boolean implication
    FiniteChain l3 = FiniteChain::with_size(3);
    CHECK(l3.neg(1) == 1);  // !(1/2) = 1/2

    Formula f = parse("p & q", kBase);
    ChainValuation v{{"p", 3}, {"q", 2}};
    CHECK(eval_chain(f, v, FiniteChain(4)) == 1);
    CHECK_THROWS_AS(eval_chain(parse("d2(p)", kAll), v, FiniteChain(4)),
                    ProfileError);
    CHECK_THROWS_AS(eval_chain(parse("x", kBase), v, FiniteChain(4)),
                    EvalError);
}

TEST_CASE("chain operations stay on the grid") {
    FiniteChain c(6);
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b) {
            for (int v : {c.impl(a, b), c.odot(a, b), c.oplus(a, b),
                          c.meet(a, b), c.join(a, b), c.neg(a)}) {
                CHECK(v >= 0);
                CHECK(v <= 6);
            }
            // chain ops agree with the rational operations
            Rational01 x = c.element(a), y = c.element(b);
            CHECK(c.element(c.impl(a, b)) == mv_impl(x, y));
            CHECK(c.element(c.odot(a, b)) == mv_odot(x, y));
        }
}
