#pragma once

#include "mvpav/formula.hpp"
#include "mvpav/profile.hpp"
#include "mvpav/rng.hpp"
#include "mvpav/theory.hpp"

namespace mvpav {

/// Seeded random formula generation for property suites and corpora.
struct GenOptions {
    LogicProfile profile;
    int max_depth = 4;
    int num_vars = 3;          // variable pool p, q, r, ...
    int max_den = 10;          // truth-constant denominators
    int max_div = 4;           // division indices
    bool ground = false;       // no variables
    bool pl_only = false;      // no product nodes even if enabled
    int max_truncations = -1;  // resample when exceeded (-1: no limit)
};

Formula random_formula(Rng& rng, const GenOptions& opts);

/// Random theory of up to max_generators formulas under the same options.
Theory random_theory(Rng& rng, const GenOptions& opts, int max_generators);

const std::vector<std::string>& gen_var_pool();

}  // namespace mvpav
