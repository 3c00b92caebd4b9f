#pragma once

#include <cstdint>
#include <optional>

#include "rcs/core.hpp"

namespace rcs {

enum class Pruning { None, FeasibilityBound };

struct SearchConfig {
    std::int64_t node_budget = 10'000'000;
    std::optional<double> time_budget_ms;
    Pruning pruning = Pruning::FeasibilityBound;
};

struct ExactResult {
    SolutionReport report;
    bool proven_optimal = false;
    std::int64_t nodes_expanded = 0;
    std::int64_t leaves_visited = 0;  // meaningful for Pruning::None
};

// Pruned backtracking over distinct arrangements of the text multiset.
// Reports the lexicographically smallest optimal arrangement. When the node
// budget runs out the best incumbent is returned with proven_optimal=false.
ExactResult solve_exact(const Instance& instance, const SearchConfig& config = {});

// Admissible bound for the search: (patterns matched by the prefix) plus the
// number of unmatched patterns whose unmet suffix demand fits the remaining
// counts. Never below the best completion score.
int upper_bound(const std::vector<Symbol>& prefix, const Instance& instance);

}  // namespace rcs
