#include "mvpav/identity.hpp"

#include <functional>

#include "mvpav/errors.hpp"

namespace mvpav {

std::string IdentityReport::lines() const {
    if (counterexamples.empty()) return "PASS\n";
    std::string out;
    for (const auto& cex : counterexamples) {
        out += "FAIL ";
        out += cex.valuation.str();
        out += " lhs=";
        out += cex.lhs_value.str();
        out += " rhs=";
        out += cex.rhs_value.str();
        out += '\n';
    }
    return out;
}

bool for_each_chain_valuation(
    const std::vector<std::string>& vars, const FiniteChain& chain,
    const std::function<bool(const ChainValuation&)>& fn) {
    ChainValuation v;
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == vars.size()) return fn(v);
        for (int a = 0; a <= chain.denom; ++a) {
            v[vars[i]] = a;
            if (!rec(i + 1)) return false;
        }
        return true;
    };
    return rec(0);
}

IdentityReport check_identity_chain(const Formula& lhs, const Formula& rhs,
                                    const FiniteChain& chain) {
    std::set<std::string> vars = variables(lhs);
    for (const auto& n : variables(rhs)) vars.insert(n);
    std::vector<std::string> order(vars.begin(), vars.end());

    IdentityReport report;
    report.exhaustive = true;
    for_each_chain_valuation(order, chain, [&](const ChainValuation& cv) {
        ++report.trials;
        int a = eval_chain(lhs, cv, chain);
        int b = eval_chain(rhs, cv, chain);
        if (a != b) {
            Counterexample cex;
            for (const auto& [name, num] : cv)
                cex.valuation.set(name, chain.element(num));
            cex.lhs_value = chain.element(a);
            cex.rhs_value = chain.element(b);
            report.counterexamples.push_back(std::move(cex));
        }
        return true;
    });
    return report;
}

IdentityReport check_identity_sampled(const Formula& lhs, const Formula& rhs,
                                      const LogicProfile& profile, Rng& rng,
                                      std::uint64_t trials,
                                      int max_denominator) {
    std::set<std::string> vars = variables(lhs);
    for (const auto& n : variables(rhs)) vars.insert(n);

    IdentityReport report;
    for (std::uint64_t t = 0; t < trials; ++t) {
        ++report.trials;
        Valuation v;
        for (const auto& name : vars)
            v.set(name, random_rational01(rng, max_denominator));
        Rational01 a = eval(lhs, v, profile);
        Rational01 b = eval(rhs, v, profile);
        if (a != b)
            report.counterexamples.push_back({std::move(v), a, b});
    }
    return report;
}

}  // namespace mvpav
