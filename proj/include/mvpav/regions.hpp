#pragma once

#include <map>
#include <string>
#include <vector>

#include "mvpav/formula.hpp"
#include "mvpav/linprog.hpp"

namespace mvpav {

/// How one truncation node is resolved inside a region.
enum class BranchKind {
    SatLow,       // max(0, e) pinned to 0
    SatHigh,      // min(1, e) pinned to 1
    Linear,       // the affine piece of a min(1,.)/max(0,.) truncation
    LinearLeft,   // min/max of two affine pieces: left piece active
    LinearRight,  // right piece active
};

/// One linearity region: constraints carve a rational polyhedron inside the
/// unit cube on which the formula's value is the affine objective.
struct Region {
    std::vector<BranchKind> branches;  // per truncation node, traversal order
    std::vector<LinConstraint> constraints;
    AffineExpr objective;
};

struct RegionSystem {
    std::vector<std::string> vars;       // sorted variable names
    std::vector<Region> regions;         // feasible regions, traversal order
    int truncation_nodes = 0;

    int var_index(const std::string& name) const;
};

struct CompileOptions {
    int truncation_cap = 24;
    /// Drop regions contained in another region with the same objective on
    /// the overlap (keeps the natural linearity pieces). Skipped when more
    /// than `subsume_limit` regions survive pruning.
    bool subsume = true;
    int subsume_limit = 32;
    /// Compile against this variable universe (superset of variables(f));
    /// empty means "exactly variables(f)".
    std::vector<std::string> var_universe;
};

/// Compiles a product-free formula into its region system. Truncation nodes
/// are the min/max connectives (->, &, +, /\, \/); !, dN, K and constants are
/// affine. Regions infeasible under exact LP are pruned during enumeration.
/// Throws PreconditionError on Bullet nodes, SizeBoundError over the cap.
RegionSystem compile_pl(const Formula& f, const CompileOptions& opts = {});

/// True when f can be compiled (no product nodes anywhere).
bool pl_fragment(const Formula& f);

}  // namespace mvpav
