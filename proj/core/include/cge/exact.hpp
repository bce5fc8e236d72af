#pragma once

#include <cstdint>
#include <optional>

#include "cge/euler.hpp"
#include "cge/multigraph.hpp"

namespace cge {

struct SearchConfig {
    int max_budget = 64;
    int max_multiplicity = 2;
    std::uint64_t node_limit = 50'000'000;
};

struct DecideResult {
    bool yes = false;
    std::optional<Solution> witness;
    std::uint64_t nodes = 0;
};

// Decides whether a solution of value <= budget exists.
DecideResult exact_decide(const ExplorationInstance& inst, int budget, const SearchConfig& cfg = {});
// Uses inst.budget (throws std::invalid_argument when absent).
DecideResult exact_decide(const ExplorationInstance& inst, const SearchConfig& cfg = {});

struct OptimumResult {
    int b_opt = 0;
    Solution witness;
};

int exact_lower_bound(const ExplorationInstance& inst);
OptimumResult exact_optimum(const ExplorationInstance& inst, const SearchConfig& cfg = {});

}  // namespace cge
