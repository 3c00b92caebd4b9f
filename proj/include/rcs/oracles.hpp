#pragma once

#include "rcs/core.hpp"
#include "rcs/graph.hpp"

// Independent brute-force solvers for the companion graph problems. Ground
// truth for reduction and approximation tests; every result carries a
// certificate that checkers can re-verify.
namespace rcs::oracles {

struct HamiltonianResult {
    std::vector<int> order;  // each vertex exactly once
    int weight = 0;
    bool is_cycle = false;
};

struct MasResult {
    std::vector<int> order;  // vertex order realizing the kept arcs
    std::vector<Arc> kept;   // forward arcs of `order`
};

// Bron-Kerbosch with pivoting; n <= 20.
std::vector<int> max_clique_exact(const UndirectedGraph& g);

// Brute force over vertex orders; n <= 9. Kept arcs are the forward arcs of
// the best order, which equals the maximum acyclic subgraph.
MasResult max_acyclic_subgraph_exact(const Digraph& g);

// Held-Karp bitmask DP over subsets; complete digraph, n <= 13.
HamiltonianResult max_atsp_exact(const Digraph& g);

// Heaviest-arc-first path system, closed into a cycle. No ratio claim beyond
// validity; weight <= max_atsp_exact on any input.
HamiltonianResult max_atsp_greedy(const Digraph& g);

// Shortest common superstring by overlap-ordering search; n <= 8 after
// removing patterns contained in others.
std::vector<Symbol> scs_exact(const std::vector<Pattern>& patterns, int sigma);

// Forward arcs of `order` in g; shared by the MAS checkers.
std::vector<Arc> forward_arcs(const Digraph& g, const std::vector<int>& order);

}  // namespace rcs::oracles
