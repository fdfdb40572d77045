#pragma once

#include "mvpav/proof.hpp"

namespace mvpav {

/// For a variable-free formula phi with exact value r = eval(phi), builds a
/// checkable proof of [r] -> phi from no hypotheses. Structural recursion
/// produces both implications between every ground subformula and the truth
/// constant of its value, folding with the book-keeping axioms (BK1/BK2/BK3),
/// the division/product axioms, and the admitted transport lemmas
/// (mv_id, mv_prefix, dmono, pmono). Throws PreconditionError when phi has
/// variables, r != eval(phi), or the profile lacks truth constants.
Proof synthesize_ground_proof(const Formula& phi, const Rational01& r,
                              const LogicProfile& profile);

}  // namespace mvpav
