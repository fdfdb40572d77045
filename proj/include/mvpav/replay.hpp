#pragma once

#include "mvpav/proof.hpp"

namespace mvpav {

/// Builds a checkable proof of (a -> b) -> ((c * a) -> (c * b)) from the
/// product-calculus axioms, mirroring the source derivation's nine stages
/// with two semantically admitted lemma steps (the external MV lemma pair
/// !(x & !y) <=> (x -> y)). Composition stages expand into explicit L2 + mp
/// steps, and the contraposition stage is justified by an L2 instance with
/// third argument 0 (the printed derivation's annotation does not
/// type-check as stated).
Proof replay_prop33(const Formula& alpha, const Formula& beta,
                    const Formula& gamma);

}  // namespace mvpav
