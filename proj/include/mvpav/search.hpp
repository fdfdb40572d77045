#pragma once

#include <cstdint>
#include <optional>

#include "mvpav/proof.hpp"

namespace mvpav {

struct SearchBudget {
    std::uint64_t max_steps = 20000;      // derived-formula insertions
    std::size_t max_formula_size = 80;    // node cap on derived formulas
    int pool_arrow_levels = 1;            // ->-closure levels over the pool
    std::size_t max_pool = 200;           // instantiation pool cap
    std::uint64_t max_axiom_instances = 100000;
};

enum class SearchStatus { Found, BudgetExhausted };

struct SearchResult {
    SearchStatus status = SearchStatus::BudgetExhausted;
    std::optional<Proof> proof;
    std::uint64_t derived = 0;

    bool found() const { return status == SearchStatus::Found; }
};

/// Bounded forward proof search: axiom instances over a finite binding pool
/// (the subformula closure of target and theory, optionally closed under ->
/// a fixed number of times) saturated under modus ponens, iterative
/// deepening over the pool level. Deterministic for a fixed budget; returned
/// proofs always pass check_proof. Failure means the budget ran out, not
/// that no proof exists.
SearchResult search_proof(const Formula& target, const Theory& theory,
                          const SearchBudget& budget = {});

}  // namespace mvpav
