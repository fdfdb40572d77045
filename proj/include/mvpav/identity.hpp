#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mvpav/eval.hpp"
#include "mvpav/formula.hpp"
#include "mvpav/rng.hpp"

namespace mvpav {

struct Counterexample {
    Valuation valuation;
    Rational01 lhs_value, rhs_value;
};

struct IdentityReport {
    std::uint64_t trials = 0;
    bool exhaustive = false;
    std::vector<Counterexample> counterexamples;

    bool pass() const { return counterexamples.empty(); }
    /// "PASS" or one "FAIL <assignment> lhs=<v> rhs=<v>" line per hit.
    std::string lines() const;
};

/// Exhaustive check of lhs = rhs over all chain tuples for the shared
/// variable set. Formulas must be base-only (chain-evaluable).
IdentityReport check_identity_chain(const Formula& lhs, const Formula& rhs,
                                    const FiniteChain& chain);

/// Sampled check over random rational valuations in [0,1]^vars.
IdentityReport check_identity_sampled(const Formula& lhs, const Formula& rhs,
                                      const LogicProfile& profile, Rng& rng,
                                      std::uint64_t trials,
                                      int max_denominator = 1000);

/// Enumerates all chain valuations of `vars` and calls fn(valuation).
/// Returns false early if fn returns false.
bool for_each_chain_valuation(const std::vector<std::string>& vars,
                              const FiniteChain& chain,
                              const std::function<bool(const ChainValuation&)>& fn);

}  // namespace mvpav
