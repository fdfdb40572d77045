#include <doctest.h>

#include "mvpav/identity.hpp"
#include "mvpav/parse.hpp"

using namespace mvpav;

namespace {
const LogicProfile kBase = LogicProfile::base();
}

TEST_CASE("defining equations hold exhaustively on small chains") {
    Formula lhs = parse("x & (x -> y)", kBase);
    Formula rhs = parse("x /\\ y", kBase);
    IdentityReport r = check_identity_chain(lhs, rhs, FiniteChain::with_size(4));
    CHECK(r.pass());
    CHECK(r.exhaustive);
    CHECK(r.trials == 16);

    Formula dn_l = parse("(x -> 0) -> 0", kBase);
    Formula dn_r = parse("x", kBase);
    CHECK(check_identity_chain(dn_l, dn_r, FiniteChain::with_size(6)).pass());
}

TEST_CASE("a failing identity lists its counterexamples") {
    Formula lhs = parse("x -> y", kBase);
    Formula rhs = parse("y -> x", kBase);
    IdentityReport r = check_identity_chain(lhs, rhs, FiniteChain::with_size(3));
    CHECK_FALSE(r.pass());
    // x=1, y=0 must be among the counterexamples
    bool found = false;
    for (const auto& cex : r.counterexamples)
        if (cex.valuation.at("x").is_one() && cex.valuation.at("y").is_zero())
            found = true;
    CHECK(found);
    CHECK(r.lines().rfind("FAIL", 0) == 0);
}

TEST_CASE("sampled identity checking is seeded and deterministic") {
    Formula lhs = parse("x + y", kBase);
    Formula rhs = parse("!(!x & !y)", kBase);
    Rng rng1(42), rng2(42);
    IdentityReport a = check_identity_sampled(lhs, rhs, kBase, rng1, 500);
    IdentityReport b = check_identity_sampled(lhs, rhs, kBase, rng2, 500);
    CHECK(a.pass());
    CHECK(b.pass());
    CHECK(a.trials == 500);

    Rng rng3(1);
    IdentityReport c =
        check_identity_sampled(parse("x", kBase), parse("x & x", kBase),
                               kBase, rng3, 200);
    CHECK_FALSE(c.pass());
}
