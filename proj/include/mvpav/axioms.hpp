#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mvpav/formula.hpp"
#include "mvpav/profile.hpp"

namespace mvpav {

/// Result of matching a formula against a scheme: metavariable bindings plus
/// scheme parameters (multiple index k, rational parameters r/s).
struct SchemeMatch {
    std::map<std::string, Formula> vars;
    std::map<std::string, Rational01> rats;
    int k = 0;

    std::string str() const;  // "{a=p; b=q; k=3; r=1/2}"
    static SchemeMatch parse(const std::string& text,
                             const LogicProfile& profile);
};

/// One axiom scheme of the calculus. Two-directional axioms of the source
/// system are materialized as separate _fw/_bw schemes.
class AxiomScheme {
  public:
    AxiomScheme(std::string name, LogicProfile required)
        : name_(std::move(name)), requires_(required) {}
    virtual ~AxiomScheme() = default;

    const std::string& name() const { return name_; }
    /// Features a profile must enable for this scheme to be available.
    const LogicProfile& requires_features() const { return requires_; }

    /// Bindings b with instantiate(b) core-equal to f, or nullopt.
    virtual std::optional<SchemeMatch> match(const Formula& f) const = 0;
    virtual Formula instantiate(const SchemeMatch& m) const = 0;

  private:
    std::string name_;
    LogicProfile requires_;
};

/// All schemes: L1..L4, PL1..PL5 (_fw/_bw), DL1 (_fw/_bw), DL2, FIX (_fw/_bw),
/// BK1/BK2 (_fw/_bw), BK3_PROD/BK3_DIV/BK3_FIX (_fw/_bw).
const std::vector<const AxiomScheme*>& axiom_registry();

/// Schemes available under a profile.
std::vector<const AxiomScheme*> schemes_for(const LogicProfile& profile);

/// Lookup by name; nullptr if unknown.
const AxiomScheme* find_scheme(const std::string& name);

inline std::optional<SchemeMatch> match_scheme(const AxiomScheme& s,
                                               const Formula& f) {
    return s.match(f);
}

/// One-sided structural unification: `pat` may contain metavariables, `f`
/// may not. Both sides are expected in core normal form.
bool unify(const Formula& pat, const Formula& f,
           std::map<std::string, Formula>& bindings);

}  // namespace mvpav
