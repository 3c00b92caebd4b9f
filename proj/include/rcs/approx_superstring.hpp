#pragma once

#include <cstdint>

#include "rcs/core.hpp"
#include "rcs/graph.hpp"
#include "rcs/oracles.hpp"

// The RCSstr approximation algorithms: maximal-concatenation for bounded
// pattern length, and the Max-ATSP cycle-break algorithm for length-2
// patterns when the text is a set.
namespace rcs::approx_str {

struct OrderStrategy {
    enum class Policy { InputOrder, LongestFirst, ShortestFirst, Random };
    Policy policy = Policy::InputOrder;
    std::uint64_t seed = 0;  // used by Random only

    static OrderStrategy input_order() { return {Policy::InputOrder, 0}; }
    static OrderStrategy longest_first() { return {Policy::LongestFirst, 0}; }
    static OrderStrategy shortest_first() { return {Policy::ShortestFirst, 0}; }
    static OrderStrategy random(std::uint64_t seed) { return {Policy::Random, seed}; }
};

enum class AtspSubroutine { ExactHeldKarp, GreedyEdge };

struct GreedyResult {
    SolutionReport report;
    std::vector<int> chosen;    // pattern indices in selection order
    std::vector<int> leftover;  // unspent budget per symbol
};

// Concatenate a maximal fitting subset of patterns (scanned in strategy
// order), then append the leftover symbols in ascending order.
SolutionReport greedy_maximal_concat(const Instance& instance, const OrderStrategy& strategy);
GreedyResult greedy_maximal_concat_detail(const Instance& instance,
                                          const OrderStrategy& strategy);

// Worst-case optimum for one greedily chosen string: q*ell*(ell*(ell+1)/2-1),
// or q*ell^2 when no pattern is a substring of another.
long long alg1_bound(int ell, int q, bool substring_free);

bool is_substring_free(const std::vector<Pattern>& patterns);

// Build the complete digraph on the alphabet with weight 1 on (a,b) iff the
// pattern ab is in S.
Digraph pair_graph(const Instance& instance);

// Max-ATSP cycle, broken at a 0-arc when one exists (otherwise one arc of the
// all-ones cycle is dropped, which is optimal at n-1).
SolutionReport solve_rcsstr2_set(const Instance& instance, AtspSubroutine sub);

}  // namespace rcs::approx_str
