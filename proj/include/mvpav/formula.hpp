#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "mvpav/profile.hpp"
#include "mvpav/rational.hpp"

namespace mvpav {

enum class Kind : std::uint8_t {
    Var,         // propositional variable
    MetaVar,     // schematic metavariable (axiom/lemma patterns only)
    Zero,        // constant 0
    One,         // defined constant 1 (= !0)
    Impl,        // ->
    Neg,         // !
    Odot,        // &   strong conjunction
    Oplus,       // +   strong disjunction
    Meet,        // lattice meet, written "/" followed by "\"
    Join,        // lattice join, written "\" followed by "/"
    Bullet,      // *   product (PMV)
    Div,         // dN  division by N (DMV)
    FixK,        // K   negation fixpoint constant
    TruthConst,  // [p/q]
};

/// Immutable formula handle with value semantics; structural equality.
/// Subtrees are shared, so copies are cheap.
class Formula {
  public:
    Formula() = default;

    static Formula var(std::string name);
    static Formula metavar(std::string name);
    static Formula zero();
    static Formula one();
    static Formula impl(Formula lhs, Formula rhs);
    static Formula neg(Formula arg);
    static Formula odot(Formula lhs, Formula rhs);
    static Formula oplus(Formula lhs, Formula rhs);
    static Formula meet(Formula lhs, Formula rhs);
    static Formula join(Formula lhs, Formula rhs);
    static Formula bullet(Formula lhs, Formula rhs);
    static Formula div(int n, Formula arg);
    static Formula fixk();
    static Formula truth(Rational01 value);

    bool valid() const { return node_ != nullptr; }
    Kind kind() const;
    int arity() const;

    const std::string& name() const;      // Var / MetaVar
    const Rational01& constant() const;   // TruthConst
    int div_index() const;                // Div
    const Formula& lhs() const;           // arity >= 1
    const Formula& rhs() const;           // arity == 2

    /// Number of nodes.
    std::size_t size() const;
    std::size_t hash() const;

    friend bool operator==(const Formula& a, const Formula& b);
    friend bool operator!=(const Formula& a, const Formula& b) {
        return !(a == b);
    }
    /// Total order: by size, then structurally. Deterministic tie-break for
    /// all canonical iteration in search and reports.
    friend bool operator<(const Formula& a, const Formula& b) {
        return compare(a, b) < 0;
    }
    static int compare(const Formula& a, const Formula& b);

    struct Node;  // implementation detail, public for the factory functions

  private:
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// True when every node of `f` is permitted by `profile`; the first
/// offending connective (if any) is reported through `offender`.
bool profile_permits(const LogicProfile& profile, const Formula& f,
                     std::string* offender = nullptr);

/// Throws ProfileError unless profile_permits.
void require_profile(const LogicProfile& profile, const Formula& f);

/// Variable names occurring in f (not metavariables).
std::set<std::string> variables(const Formula& f);

/// Metavariable names occurring in f.
std::set<std::string> metavariables(const Formula& f);

/// Simultaneous substitution of variables; names absent from `bindings`
/// are left unchanged.
Formula substitute(const Formula& f,
                   const std::map<std::string, Formula>& bindings);

/// Like substitute, but replaces metavariables instead of variables.
Formula substitute_meta(const Formula& f,
                        const std::map<std::string, Formula>& bindings);

/// Rewrites derived connectives into the core signature
/// {Var, MetaVar, Zero, Impl, Bullet, Div, FixK, TruthConst}:
///   !a       => a -> 0
///   1        => 0 -> 0
///   a & b    => !(a -> !b)       (expanded)
///   a + b    => !(!a & !b)       (expanded)
///   a /\ b   => a & (a -> b)     (expanded)
///   a \/ b   => (a -> b) -> b
Formula to_core(const Formula& f);

/// True when the two formulas have identical core normal forms.
bool core_equal(const Formula& a, const Formula& b);

/// The n-fold formula "n a" in the calculus form: 0a = 0, 1a = a,
/// (k+1)a = !a -> ka.
Formula expand_multiple(int n, const Formula& f);

/// All distinct subformulas, including f itself.
std::vector<Formula> subformulas(const Formula& f);

}  // namespace mvpav
