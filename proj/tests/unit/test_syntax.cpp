#include <doctest.h>

#include <functional>
#include <sstream>

#include "mvpav/errors.hpp"
#include "mvpav/eval.hpp"
#include "mvpav/gen.hpp"
#include "mvpav/parse.hpp"
#include "mvpav/rng.hpp"

using namespace mvpav;

namespace {
const LogicProfile kAll = LogicProfile::all();
const LogicProfile kBase = LogicProfile::base();
}  // namespace

TEST_CASE("parsing the calculus axiom shapes") {
    Formula f = parse("p -> (q -> p)", kBase);
    CHECK(f == Formula::impl(Formula::var("p"),
                             Formula::impl(Formula::var("q"),
                                           Formula::var("p"))));
    // right-associativity
    CHECK(parse("p -> q -> p", kBase) == f);
}

TEST_CASE("parsing constants and gated connectives") {
    CHECK(parse("[1/2]", kAll) == Formula::truth(Rational01(1, 2)));
    CHECK(parse("[1]", kAll) == Formula::truth(Rational01::one()));
    CHECK(parse("d3(p)", kAll) ==
          Formula::div(3, Formula::var("p")));
    CHECK(parse("K", kAll) == Formula::fixk());
    CHECK_THROWS_AS(parse("d3(p)", kBase), ProfileError);
    CHECK_THROWS_AS(parse("[1/2]", kBase), ProfileError);
    CHECK_THROWS_AS(parse("K", kBase), ProfileError);
    CHECK_THROWS_AS(parse("p * q", kBase), ProfileError);
    CHECK_THROWS_AS(parse("[3/2]", kAll), ParseError);
    CHECK_THROWS_AS(parse("p -> ", kBase), ParseError);
    CHECK_THROWS_AS(parse("(p -> q", kBase), ParseError);
}

TEST_CASE("precedence: -> weakest, then +, &, *, meet, join, unary") {
    // p + q & r  =  p + (q & r)
    CHECK(parse("p + q & r", kBase) ==
          Formula::oplus(Formula::var("p"),
                         Formula::odot(Formula::var("q"), Formula::var("r"))));
    // join binds tighter than meet
    CHECK(parse("p /\\ q \\/ r", kBase) ==
          Formula::meet(Formula::var("p"),
                        Formula::join(Formula::var("q"), Formula::var("r"))));
    CHECK(parse("!p & q", kBase) ==
          Formula::odot(Formula::neg(Formula::var("p")), Formula::var("q")));
    CHECK(print(Formula::impl(Formula::var("p"), Formula::zero())) ==
          "p -> 0");
    CHECK(print(Formula::truth(Rational01(2, 3))) == "[2/3]");
    CHECK(print(Formula::bullet(Formula::var("p"), Formula::var("q"))) ==
          "p * q");
}

TEST_CASE("round-trip on 10000 random formulas") {
    Rng rng(2024);
    GenOptions opts;
    opts.profile = kAll;
    opts.max_depth = 5;
    for (int i = 0; i < 10000; ++i) {
        Formula f = random_formula(rng, opts);
        Formula back = parse(print(f), kAll);
        REQUIRE(back == f);
    }
}

TEST_CASE("to_core definitional expansions") {
    Formula p = Formula::var("p"), q = Formula::var("q");
    CHECK(to_core(Formula::neg(p)) == Formula::impl(p, Formula::zero()));
    CHECK(to_core(Formula::one()) ==
          Formula::impl(Formula::zero(), Formula::zero()));
    // core output uses only the core signature
    Formula mixed = parse("(p + q) /\\ (p \\/ !q)", kBase);
    Formula core = to_core(mixed);
    std::function<bool(const Formula&)> core_only = [&](const Formula& f) {
        switch (f.kind()) {
            case Kind::Var:
            case Kind::Zero:
            case Kind::Impl:
            case Kind::Bullet:
            case Kind::Div:
            case Kind::FixK:
            case Kind::TruthConst:
                break;
            default:
                return false;
        }
        for (int i = 0; i < f.arity(); ++i)
            if (!core_only(i == 0 ? f.lhs() : f.rhs())) return false;
        return true;
    };
    CHECK(core_only(core));
}

TEST_CASE("to_core preserves semantics on 1000 random valuations") {
    Rng rng(7);
    GenOptions opts;
    opts.profile = kAll;
    opts.max_depth = 4;
    for (int i = 0; i < 200; ++i) {
        Formula f = random_formula(rng, opts);
        Formula core = to_core(f);
        auto vars = variables(f);
        for (int t = 0; t < 5; ++t) {
            Valuation v;
            for (const auto& name : vars)
                v.set(name, random_rational01(rng));
            REQUIRE(eval(f, v, kAll) == eval(core, v, kAll));
        }
    }
}

TEST_CASE("expand_multiple matches the inductive definition") {
    Formula p = Formula::var("p");
    CHECK(expand_multiple(0, p) == Formula::zero());
    CHECK(expand_multiple(1, p) == p);
    CHECK(expand_multiple(2, p) == Formula::impl(Formula::neg(p), p));
    CHECK(expand_multiple(3, p) ==
          Formula::impl(Formula::neg(p),
                        Formula::impl(Formula::neg(p), p)));
}

TEST_CASE("expand_multiple agrees with oplus iteration up to 12") {
    Rng rng(99);
    Formula p = Formula::var("p");
    for (int n = 0; n <= 12; ++n) {
        Formula nf = expand_multiple(n, p);
        for (int t = 0; t < 50; ++t) {
            Valuation v;
            Rational01 x = random_rational01(rng);
            v.set("p", x);
            Rational01 iterated = Rational01::zero();
            for (int i = 0; i < n; ++i) iterated = mv_oplus(iterated, x);
            REQUIRE(eval(nf, v, kBase) == iterated);
        }
    }
}

TEST_CASE("substitute and variables") {
    Formula f = parse("p -> q", kBase);
    Formula g = substitute(f, {{"p", parse("[1/2]", kAll)}});
    CHECK(print(g) == "[1/2] -> q");
    CHECK(substitute(parse("p", kBase), {}) == parse("p", kBase));
    Formula h = substitute(parse("p -> p", kBase),
                           {{"p", parse("q & q", kBase)}});
    CHECK(print(h) == "q & q -> q & q");
    CHECK(variables(parse("p -> (q -> p)", kBase)) ==
          std::set<std::string>{"p", "q"});
    CHECK(variables(parse("[1/2]", kAll)).empty());
    CHECK(variables(parse("d3(p * p)", kAll)) == std::set<std::string>{"p"});
}

TEST_CASE("theory file round-trip") {
    std::stringstream ss;
    ss << "# sample\nprofile: base,constants\np -> q\n[1/2] -> p\n";
    Theory t = Theory::load(ss);
    CHECK(t.profile.constants);
    CHECK_FALSE(t.profile.product);
    REQUIRE(t.generators.size() == 2);
    CHECK(print(t.generators[1]) == "[1/2] -> p");
    std::stringstream out;
    t.save(out);
    Theory t2 = Theory::load(out);
    CHECK(t2.generators == t.generators);
}
