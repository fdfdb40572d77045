#include "mvpav/lemma.hpp"

#include <algorithm>

#include "mvpav/errors.hpp"
#include "mvpav/eval.hpp"

namespace mvpav {

namespace {

/// Pattern with metavariables read as plain variables, for evaluation.
Formula meta_as_vars(const Formula& pattern) {
    std::map<std::string, Formula> b;
    for (const auto& name : metavariables(pattern))
        b.emplace(name, Formula::var(name));
    return substitute_meta(pattern, b);
}

bool base_only(const Formula& f) {
    return profile_permits(LogicProfile::base(), f);
}

}  // namespace

RegistrationResult LemmaRegistry::validate(
    const Formula& pattern, const LemmaValidationBudget& budget) {
    Formula probe = meta_as_vars(pattern);
    std::vector<std::string> vars;
    for (const auto& n : variables(probe)) vars.push_back(n);

    RegistrationResult res;
    // Exhaustive over small chains, for base-only patterns.
    if (base_only(probe)) {
        for (int m = budget.chain_from; m <= budget.chain_to; ++m) {
            FiniteChain chain = FiniteChain::with_size(m);
            bool ok = for_each_chain_valuation(
                vars, chain, [&](const ChainValuation& cv) {
                    if (eval_chain(probe, cv, chain) == chain.denom)
                        return true;
                    Counterexample cex;
                    for (const auto& [name, num] : cv)
                        cex.valuation.set(name, chain.element(num));
                    cex.lhs_value = chain.element(eval_chain(probe, cv, chain));
                    cex.rhs_value = Rational01::one();
                    res.counterexample = std::move(cex);
                    return false;
                });
            if (!ok) {
                res.message = "chain counterexample on the " +
                              std::to_string(m) + "-element chain";
                return res;
            }
        }
    }
    // Seeded random rational valuations.
    Rng rng(budget.seed);
    LogicProfile all = LogicProfile::all();
    for (std::uint64_t t = 0; t < budget.random_trials; ++t) {
        Valuation v;
        for (const auto& name : vars)
            v.set(name, random_rational01(rng, budget.max_denominator));
        Rational01 value = eval(probe, v, all);
        if (!value.is_one()) {
            Counterexample cex;
            cex.valuation = v;
            cex.lhs_value = value;
            cex.rhs_value = Rational01::one();
            res.counterexample = std::move(cex);
            res.message = "random valuation counterexample";
            return res;
        }
    }
    res.ok = true;
    res.message = "semantically admitted";
    return res;
}

RegistrationResult LemmaRegistry::register_lemma(
    const std::string& name, Formula pattern,
    const LemmaValidationBudget& budget) {
    if (find(name)) {
        RegistrationResult res;
        res.message = "lemma name already registered: " + name;
        return res;
    }
    RegistrationResult res = validate(pattern, budget);
    if (!res.ok) return res;
    Lemma lemma;
    lemma.name = name;
    lemma.k_indexed = false;
    Formula pat = pattern;
    lemma.pattern_for = [pat](int) { return pat; };
    LogicProfile req;
    std::string offender;
    Formula probe = meta_as_vars(pattern);
    req.product = !profile_permits(LogicProfile{false, true, true, true}, probe,
                                   &offender);
    req.division = !profile_permits(LogicProfile{true, false, true, true},
                                    probe, &offender);
    req.fixpoint = !profile_permits(LogicProfile{true, true, false, true},
                                    probe, &offender);
    req.constants = !profile_permits(LogicProfile{true, true, true, false},
                                     probe, &offender);
    lemma.required = req;
    lemmas_.push_back(std::move(lemma));
    return res;
}

RegistrationResult LemmaRegistry::register_lemma_k(
    const std::string& name, std::function<Formula(int)> pattern_for,
    LogicProfile required, const LemmaValidationBudget& budget) {
    if (find(name)) {
        RegistrationResult res;
        res.message = "lemma name already registered: " + name;
        return res;
    }
    RegistrationResult res;
    for (int k = 1; k <= 12; ++k) {
        res = validate(pattern_for(k), budget);
        if (!res.ok) {
            res.message += " (k=" + std::to_string(k) + ")";
            return res;
        }
    }
    Lemma lemma;
    lemma.name = name;
    lemma.k_indexed = true;
    lemma.pattern_for = std::move(pattern_for);
    lemma.required = required;
    lemmas_.push_back(std::move(lemma));
    return res;
}

const Lemma* LemmaRegistry::find(const std::string& name) const {
    for (const Lemma& l : lemmas_)
        if (l.name == name) return &l;
    return nullptr;
}

std::vector<std::string> LemmaRegistry::names() const {
    std::vector<std::string> out;
    for (const Lemma& l : lemmas_) out.push_back(l.name);
    return out;
}

std::optional<SchemeMatch> LemmaRegistry::match(const Lemma& lemma,
                                                const Formula& f) const {
    Formula cf = to_core(f);
    int max_k = lemma.k_indexed ? static_cast<int>(cf.size()) + 1 : 1;
    for (int k = 1; k <= max_k; ++k) {
        Formula pattern = lemma.pattern(k);
        SchemeMatch m;
        m.k = lemma.k_indexed ? k : 0;
        if (unify(to_core(pattern), cf, m.vars)) {
            bool complete = true;
            for (const auto& name : metavariables(pattern))
                if (!m.vars.count(name)) complete = false;
            if (complete) return m;
        }
    }
    return std::nullopt;
}

Formula LemmaRegistry::instantiate(const Lemma& lemma,
                                   const SchemeMatch& m) const {
    int k = lemma.k_indexed ? m.k : 1;
    if (lemma.k_indexed && k < 1)
        throw Error("lemma " + lemma.name + " needs parameter k >= 1");
    Formula pattern = lemma.pattern(k);
    for (const auto& name : metavariables(pattern))
        if (!m.vars.count(name))
            throw Error("missing binding for metavariable " + name +
                        " in lemma " + lemma.name);
    return substitute_meta(pattern, m.vars);
}

const LemmaRegistry& LemmaRegistry::builtin() {
    static const LemmaRegistry reg = [] {
        LemmaRegistry r;
        const Formula a = Formula::metavar("a");
        const Formula b = Formula::metavar("b");
        const Formula c = Formula::metavar("c");
        auto require_ok = [](const RegistrationResult& res,
                             const char* name) {
            if (!res.ok)
                throw Error(std::string("built-in lemma failed validation: ") +
                            name + ": " + res.message);
        };
        require_ok(
            r.register_lemma("cdm_311a",
                             Formula::impl(Formula::impl(a, b),
                                           Formula::neg(Formula::odot(
                                               a, Formula::neg(b))))),
            "cdm_311a");
        require_ok(
            r.register_lemma("cdm_311b",
                             Formula::impl(Formula::neg(Formula::odot(
                                               a, Formula::neg(b))),
                                           Formula::impl(a, b))),
            "cdm_311b");
        require_ok(r.register_lemma("mv_id", Formula::impl(a, a)), "mv_id");
        require_ok(r.register_lemma(
                       "mv_prefix",
                       Formula::impl(Formula::impl(b, c),
                                     Formula::impl(Formula::impl(a, b),
                                                   Formula::impl(a, c)))),
                   "mv_prefix");
        require_ok(r.register_lemma("mv_efq",
                                    Formula::impl(Formula::zero(), a)),
                   "mv_efq");
        require_ok(
            r.register_lemma_k(
                "dmono",
                [a, b](int k) {
                    return Formula::impl(
                        Formula::impl(a, b),
                        Formula::impl(Formula::div(k, a), Formula::div(k, b)));
                },
                LogicProfile{false, true, false, false}),
            "dmono");
        require_ok(
            r.register_lemma("pmono",
                             Formula::impl(Formula::impl(a, b),
                                           Formula::impl(Formula::bullet(c, a),
                                                         Formula::bullet(c, b))),
                             LemmaValidationBudget{}),
            "pmono");
        return r;
    }();
    return reg;
}

}  // namespace mvpav
