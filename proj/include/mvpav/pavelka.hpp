#pragma once

#include <utility>
#include <vector>

#include "mvpav/degrees.hpp"
#include "mvpav/ground.hpp"
#include "mvpav/search.hpp"

namespace mvpav {

/// Lower bound on the proof degree: the largest r for which a proof of
/// [r] -> phi from the theory was found. Every reported r is backed by a
/// stored checkable proof. hi is always 1 (search failure refutes nothing).
struct ProofDegreeResult {
    DegreeBounds bounds;
    std::vector<std::pair<Rational01, Proof>> certificates;  // ascending r

    const Proof& best_proof() const;
};

ProofDegreeResult proof_degree_lower(const Formula& phi, const Theory& theory,
                                     const SearchBudget& budget = {});

/// Pavelka-gap report: proof-degree lower bound vs truth degree. The
/// soundness inequality proof_lower <= truth.hi must always hold; equality
/// with an exact truth degree is flagged when achieved.
struct GapReport {
    ProofDegreeResult proof_lower;
    DegreeBounds truth;
    bool used_exact_engine = false;
    bool sound = false;
    bool equal = false;
};

struct GapOptions {
    SearchBudget budget;
    Rat grid_eps = Rat(1, 20);
    Rat grid_delta = Rat(1, 20);
};

GapReport pavelka_gap(const Formula& phi, const Theory& theory,
                      const GapOptions& opts = {});

/// Inclusion-minimal S0 subseteq S with r <= truth_degree(phi, S0), found by
/// subset enumeration ordered by size. Precondition: r <= truth_degree(phi,S)
/// and |S| within the configured bound (the enumeration is exponential).
struct CompactnessResult {
    std::vector<int> subset;  // indices into theory.generators, ascending
    DegreeBounds subset_degree;
};

CompactnessResult compactness_probe(const Formula& phi, const Theory& theory,
                                    const Rational01& r,
                                    int max_generators = 12);

}  // namespace mvpav
