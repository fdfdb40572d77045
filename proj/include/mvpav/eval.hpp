#pragma once

#include <map>
#include <string>
#include <vector>

#include "mvpav/formula.hpp"
#include "mvpav/profile.hpp"
#include "mvpav/rational.hpp"

namespace mvpav {

/// Total assignment of truth values to variable names.
struct Valuation {
    std::map<std::string, Rational01> assignment;

    Valuation() = default;
    explicit Valuation(std::map<std::string, Rational01> a)
        : assignment(std::move(a)) {}

    const Rational01& at(const std::string& name) const;
    void set(const std::string& name, Rational01 v) {
        assignment[name] = std::move(v);
    }
    std::string str() const;  // "p=1/2,q=3/4" in name order
};

/// Exact evaluation in the standard algebra on [0,1]. Throws EvalError for
/// missing variables and ProfileError for gated connectives.
Rational01 eval(const Formula& f, const Valuation& v,
                const LogicProfile& profile);

/// The chain with carrier {0, 1/denom, ..., 1}; elements are numerators.
/// Closed under the base operations only.
struct FiniteChain {
    int denom;  // >= 1; the chain has denom+1 elements

    explicit FiniteChain(int d);
    /// The m-element chain (denominator m-1).
    static FiniteChain with_size(int m) { return FiniteChain(m - 1); }

    int size() const { return denom + 1; }
    Rational01 element(int numerator) const;

    int impl(int a, int b) const;
    int odot(int a, int b) const;
    int oplus(int a, int b) const;
    int neg(int a) const { return denom - a; }
    int meet(int a, int b) const { return a < b ? a : b; }
    int join(int a, int b) const { return a > b ? a : b; }
};

/// Valuation into a finite chain: variable -> numerator.
using ChainValuation = std::map<std::string, int>;

/// Evaluates a base-only formula on the chain. Throws ProfileError if f
/// contains product, division, fixpoint or truth constants (these do not
/// close on the chain grid); EvalError for missing variables.
int eval_chain(const Formula& f, const ChainValuation& v,
               const FiniteChain& chain);

}  // namespace mvpav
