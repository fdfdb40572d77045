#include "mvpav/gen.hpp"

#include "mvpav/errors.hpp"
#include "mvpav/regions.hpp"

namespace mvpav {

const std::vector<std::string>& gen_var_pool() {
    static const std::vector<std::string> pool = {"p", "q", "r", "s", "t",
                                                  "u", "v", "w"};
    return pool;
}

namespace {

int count_truncations(const Formula& f) {
    int n = 0;
    switch (f.kind()) {
        case Kind::Impl:
        case Kind::Odot:
        case Kind::Oplus:
        case Kind::Meet:
        case Kind::Join:
            n = 1;
            break;
        default:
            break;
    }
    for (int i = 0; i < f.arity(); ++i)
        n += count_truncations(i == 0 ? f.lhs() : f.rhs());
    return n;
}

Formula leaf(Rng& rng, const GenOptions& opts) {
    // leaves: variable / 0 / 1 / constant / K
    int kinds = 3;  // var (or const when ground), 0, 1
    if (opts.profile.constants) ++kinds;
    if (opts.profile.fixpoint) ++kinds;
    int pick = rng.range(0, kinds - 1);
    if (pick == 0) {
        if (!opts.ground) {
            int v = rng.range(0, opts.num_vars - 1);
            return Formula::var(gen_var_pool()[static_cast<std::size_t>(v)]);
        }
        if (opts.profile.constants) {
            int den = rng.range(1, opts.max_den);
            return Formula::truth(Rational01(rng.range(0, den), den));
        }
        return rng.coin() ? Formula::zero() : Formula::one();
    }
    if (pick == 1) return Formula::zero();
    if (pick == 2) return Formula::one();
    if (pick == 3 && opts.profile.constants) {
        int den = rng.range(1, opts.max_den);
        return Formula::truth(Rational01(rng.range(0, den), den));
    }
    return Formula::fixk();
}

Formula node(Rng& rng, const GenOptions& opts, int depth) {
    if (depth <= 0) return leaf(rng, opts);
    // connective pool: ->, !, &, +, /\, \/ always; * and dN when enabled
    std::vector<int> choices = {0, 0, 1, 2, 3, 4, 5};  // -> twice as likely
    if (opts.profile.product && !opts.pl_only) choices.push_back(6);
    if (opts.profile.division) choices.push_back(7);
    choices.push_back(8);  // a leaf early, to vary shapes
    int c = choices[static_cast<std::size_t>(
        rng.range(0, static_cast<int>(choices.size()) - 1))];
    switch (c) {
        case 0:
            return Formula::impl(node(rng, opts, depth - 1),
                                 node(rng, opts, depth - 1));
        case 1:
            return Formula::neg(node(rng, opts, depth - 1));
        case 2:
            return Formula::odot(node(rng, opts, depth - 1),
                                 node(rng, opts, depth - 1));
        case 3:
            return Formula::oplus(node(rng, opts, depth - 1),
                                  node(rng, opts, depth - 1));
        case 4:
            return Formula::meet(node(rng, opts, depth - 1),
                                 node(rng, opts, depth - 1));
        case 5:
            return Formula::join(node(rng, opts, depth - 1),
                                 node(rng, opts, depth - 1));
        case 6:
            return Formula::bullet(node(rng, opts, depth - 1),
                                   node(rng, opts, depth - 1));
        case 7:
            return Formula::div(rng.range(1, opts.max_div),
                                node(rng, opts, depth - 1));
        default:
            return leaf(rng, opts);
    }
}

}  // namespace

Formula random_formula(Rng& rng, const GenOptions& opts) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Formula f = node(rng, opts, opts.max_depth);
        if (opts.max_truncations >= 0 &&
            count_truncations(f) > opts.max_truncations)
            continue;
        if (opts.ground && !variables(f).empty()) continue;
        return f;
    }
    throw Error("random_formula: no shape satisfied the limits");
}

Theory random_theory(Rng& rng, const GenOptions& opts, int max_generators) {
    Theory t;
    t.profile = opts.profile;
    int n = rng.range(0, max_generators);
    for (int i = 0; i < n; ++i)
        t.generators.push_back(random_formula(rng, opts));
    return t;
}

}  // namespace mvpav
