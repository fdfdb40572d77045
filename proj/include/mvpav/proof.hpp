#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mvpav/axioms.hpp"
#include "mvpav/formula.hpp"
#include "mvpav/theory.hpp"

namespace mvpav {

class LemmaRegistry;

/// Why a proof step holds. Indices are 1-based, as in proof files.
struct Justification {
    enum class Tag { Axiom, Hypothesis, ModusPonens, Lemma };
    Tag tag = Tag::Hypothesis;
    std::string name;     // axiom / lemma name
    SchemeMatch binding;  // axiom / lemma instantiation
    int i = 0;            // hypothesis index, or minor premise
    int j = 0;            // major premise (the implication)

    static Justification axiom(std::string name, SchemeMatch m);
    static Justification hypothesis(int index);
    static Justification mp(int minor, int major);
    static Justification lemma(std::string name, SchemeMatch m);

    std::string str() const;
};

struct ProofStep {
    Formula formula;
    Justification just;
};

/// Hilbert-style proof over a finite theory. Step formulas are compared
/// after core normalization everywhere; for modus ponens mp(i,j), step j
/// must be (step i -> this step).
struct Proof {
    Theory theory;
    std::vector<ProofStep> steps;

    const Formula& final_formula() const;

    /// File format, one step per line:
    ///   <index> | <formula> | axiom:<NAME> {bindings}
    ///                       | hyp:<i> | mp:<i>,<j>
    ///                       | lemma:<NAME> {bindings}
    /// preceded by an optional "profile: ..." header and "assume: <formula>"
    /// lines declaring the theory generators in order.
    static Proof load(std::istream& in);
    static Proof load_file(const std::string& path);
    void save(std::ostream& out) const;
    std::string str() const;
};

struct StepDiagnostic {
    int index = 0;  // 1-based; 0 for proof-level problems
    bool ok = true;
    std::string message;
};

struct Verdict {
    bool accepted = true;
    std::vector<StepDiagnostic> steps;

    std::string lines() const;  // "step <i> ok|fail <msg>" + "verdict ..."
};

/// Validates every step: axiom steps must match their scheme (and the scheme
/// must be permitted by the theory profile), hypothesis steps must cite a
/// generator, mp steps must have the right shape after core normalization,
/// lemma steps must cite a registered lemma instantiated by their binding.
Verdict check_proof(const Proof& p, const LemmaRegistry& lemmas);

}  // namespace mvpav
