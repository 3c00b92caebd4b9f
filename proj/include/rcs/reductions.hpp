#pragma once

#include <functional>
#include <string>

#include "rcs/core.hpp"
#include "rcs/exact.hpp"
#include "rcs/graph.hpp"

// Constructive hardness reductions as instance generators with
// certificate maps in both directions, plus the binary shortest common
// superstring driver built on top of the exact solver.
namespace rcs::reductions {

struct NotAClique : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InternalInvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};
struct BudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Default printable labels handed to reduction-built instances (vertex i gets
// label charset[i]).
std::string default_labels(int n);

// Maximum clique -> RCSstr: n copies of each vertex symbol; pattern i is
// v_i^n followed by the ascending non-neighbors of v_i.
Instance clique_to_rcsstr(const UndirectedGraph& g);

// Concatenate the clique's patterns in ascending order, append the leftover
// symbols ascending. Scores >= |clique| on clique_to_rcsstr(g).
Arrangement clique_to_arrangement(const UndirectedGraph& g, const std::vector<int>& clique);

// Vertices of the patterns matched by the arrangement. Always a clique; a
// non-clique result would falsify the reduction and throws.
std::vector<int> arrangement_to_clique(const UndirectedGraph& g, const Arrangement& arrangement);

// Max ATSP with 0/1 weights -> RCSstr[2] with t a set.
Instance atsp01_to_rcsstr2(const Digraph& g);

// Maximum acyclic subgraph -> RCSseq[2] with t a set.
Instance digraph_to_rcsseq2(const Digraph& g);

// True iff the proven optimum matches every pattern. Throws BudgetExhausted
// when the solver cannot prove optimality within config.
bool is_complete(const Instance& instance, const SearchConfig& config = {});

struct ScsDriverResult {
    std::vector<Symbol> superstring;  // over symbols 0/1
    int length = 0;
    int solver_calls = 0;
};

// Shortest common superstring over {0,1} by sweeping candidate multisets
// 0^i 1^j in increasing total length and returning the arrangement of the
// first complete instance. binary_search switches the sweep over the total
// length to a bisection.
ScsDriverResult binary_scs_driver(const std::vector<Pattern>& patterns,
                                  const SearchConfig& config = {},
                                  bool binary_search = false);

}  // namespace rcs::reductions
