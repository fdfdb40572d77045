#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mvpav/axioms.hpp"
#include "mvpav/formula.hpp"
#include "mvpav/identity.hpp"

namespace mvpav {

struct LemmaValidationBudget {
    int chain_from = 2;   // smallest chain size (element count)
    int chain_to = 6;     // largest chain size
    std::uint64_t random_trials = 10000;
    std::uint64_t seed = 0;
    int max_denominator = 1000;
};

struct RegistrationResult {
    bool ok = false;
    std::string message;
    std::optional<Counterexample> counterexample;
};

/// A lemma admitted into proofs after semantic validation ("semantically
/// admitted" — distinct from a scheme derived inside the calculus). Patterns
/// may be indexed by a division multiple k.
struct Lemma {
    std::string name;
    bool k_indexed = false;
    std::function<Formula(int)> pattern_for;  // argument ignored if !k_indexed
    LogicProfile required;

    Formula pattern(int k = 1) const { return pattern_for(k_indexed ? k : 1); }
};

class LemmaRegistry {
  public:
    LemmaRegistry() = default;

    /// Validates the pattern (value 1 on chains when base-only, and on
    /// seeded random rational valuations; k-indexed patterns are validated
    /// for k = 1..12 up front and lazily beyond) and registers it on success.
    RegistrationResult register_lemma(const std::string& name, Formula pattern,
                                      const LemmaValidationBudget& budget = {});
    RegistrationResult register_lemma_k(
        const std::string& name, std::function<Formula(int)> pattern_for,
        LogicProfile required, const LemmaValidationBudget& budget = {});

    const Lemma* find(const std::string& name) const;
    std::vector<std::string> names() const;

    std::optional<SchemeMatch> match(const Lemma& lemma,
                                     const Formula& f) const;
    Formula instantiate(const Lemma& lemma, const SchemeMatch& m) const;

    /// Registry with the built-in lemmas:
    ///   cdm_311a : (a -> b) -> !(a & !b)
    ///   cdm_311b : !(a & !b) -> (a -> b)
    ///   mv_id    : a -> a
    ///   mv_prefix: (b -> c) -> ((a -> b) -> (a -> c))
    ///   mv_efq   : 0 -> a
    ///   dmono    : (a -> b) -> (dk a -> dk b)     (k-indexed)
    ///   pmono    : (a -> b) -> ((c * a) -> (c * b))
    static const LemmaRegistry& builtin();

  private:
    static RegistrationResult validate(const Formula& pattern,
                                       const LemmaValidationBudget& budget);

    std::vector<Lemma> lemmas_;
};

}  // namespace mvpav
