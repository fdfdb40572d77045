#pragma once

#include <string>

#include "mvpav/formula.hpp"
#include "mvpav/profile.hpp"

namespace mvpav {

// Concrete syntax (whitespace-insensitive, UTF-8):
//   implication   a -> b          right-associative, weakest
//   oplus         a + b
//   odot          a & b
//   bullet        a * b
//   meet          a "/" "\" b     (lattice meet)
//   join          a "\" "/" b     (lattice join; binds tighter than meet)
//   negation      !a
//   division      dN(a)           N a positive integer
//   fixpoint      K
//   constants     [p/q] or [p]    rational in [0,1]
//   literals      0, 1
//   variables     identifiers other than the reserved forms above
// Binary connectives of equal precedence other than -> associate left.
// Fully parenthesized input is always accepted.

/// Parses `text` under `profile`. Throws ParseError (with position) on bad
/// syntax and ProfileError when a connective is not enabled.
Formula parse(const std::string& text, const LogicProfile& profile);

/// Deterministic text form; parse(print(f), p) == f for any permitting p.
std::string print(const Formula& f);

}  // namespace mvpav
