#pragma once

#include <map>
#include <optional>
#include <string>

#include "mvpav/eval.hpp"
#include "mvpav/regions.hpp"
#include "mvpav/theory.hpp"

namespace mvpav {

/// Certified interval for a truth/proof degree.
struct DegreeBounds {
    Rational01 lo, hi;
    bool exact = false;
    std::optional<Valuation> witness;  // attains hi (for infima: a feasible
                                       // point with value hi)
    bool vacuous = false;  // no valuation satisfies the theory
    bool relaxed_lo = false;  // lo certified against the delta-relaxed
                              // constraint set (grid engine only)
};

struct DegreeOptions {
    CompileOptions compile;
};

/// Exact infimum of v(phi) over valuations with v(tau) = 1 for every
/// generator tau (piecewise-linear fragment; the feasible set is a finite
/// union of closed rational polyhedra, so the infimum is attained and a
/// witness is returned). An unsatisfiable theory yields the empty-infimum
/// value 1 with the vacuous flag set.
DegreeBounds truth_degree_exact(const Formula& phi, const Theory& theory,
                                const DegreeOptions& opts = {});

/// Per-variable constants L_x with
///   |eval(f,v) - eval(f,v')| <= sum_x L_x |v(x) - v'(x)|.
std::map<std::string, Rat> lipschitz_bound(const Formula& f);

/// Certified bounds for the general fragment (products allowed) by seeded-
/// free exhaustive grid search:
///   lo <= inf { eval(phi,v) : eval(tau,v) >= 1 - delta for all tau }
///   hi  = min over grid points with eval(tau,v) = 1 exactly (1 if none).
/// The grid pitch is chosen from lipschitz_bound so the lo certificate has
/// slack at most eps. When no grid point is even delta-relaxed feasible, the
/// Lipschitz argument shows the exact feasible set is empty: vacuous result.
DegreeBounds truth_degree_grid(const Formula& phi, const Theory& theory,
                               const Rat& eps, const Rat& delta,
                               const DegreeOptions& opts = {});

/// Exhaustive minimum of eval(phi) over grid valuations (denominator m) that
/// satisfy every generator exactly; nullopt when no grid point is feasible.
/// Independent brute-force oracle for the exact solver.
std::optional<Rational01> truth_degree_chain_brute(const Formula& phi,
                                                   const Theory& theory,
                                                   int denominator);

}  // namespace mvpav
