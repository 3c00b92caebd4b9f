#pragma once

#include <cstdint>

#include "rcs/core.hpp"
#include "rcs/graph.hpp"

// RCSseq approximations: the P/P'/Q partition algorithm for length-2
// patterns (maximum-acyclic-subgraph subroutine, F.F'.F.F'' output) and the
// random-permutation baseline.
namespace rcs::approx_seq {

struct PqPartition {
    std::vector<Symbol> p;        // symbols with count >= 2, ascending
    std::vector<Symbol> p_prime;  // symbols with count == 1, ascending
    MultisetText q;               // count-2 residual copies of each P symbol
};

struct MasSubroutine {
    enum class Policy { ExactBrute, OrderVsReverse, LocalSearch };
    Policy policy = Policy::ExactBrute;
    std::uint64_t seed = 0;
    int passes = 1;  // LocalSearch improvement passes (each capped at 2|V| moves)

    static MasSubroutine exact_brute() { return {Policy::ExactBrute, 0, 0}; }
    static MasSubroutine order_vs_reverse(std::uint64_t seed) {
        return {Policy::OrderVsReverse, seed, 0};
    }
    static MasSubroutine local_search(std::uint64_t seed, int passes = 1) {
        return {Policy::LocalSearch, seed, passes};
    }
};

struct MasOrder {
    std::vector<int> order;
    std::vector<Arc> kept;  // forward arcs of `order`
};

PqPartition partition_pq(const MultisetText& text);

// Vertices are the single-occurrence symbols; arc (a,b) iff pattern ab is in
// S with both ends single-occurrence. Vertex i of the result is p_prime[i].
Digraph build_p_prime_graph(const Instance& instance, const PqPartition& partition);

// Every variant keeps >= ceil(|E|/2) arcs; ExactBrute is the true maximum.
MasOrder mas_order(const Digraph& graph, const MasSubroutine& sub);

// F . F' . F . F'' with F and F'' in ascending symbol order; p_prime_order
// holds vertex indices into partition.p_prime.
Arrangement assemble_arrangement(const PqPartition& partition,
                                 const std::vector<int>& p_prime_order);

SolutionReport solve_rcsseq2(const Instance& instance, const MasSubroutine& mas);

// Max over symbols of total occurrences across all patterns.
int compute_delta(const std::vector<Pattern>& patterns, int sigma);

// Uniform over distinct arrangements.
Arrangement random_arrangement(const MultisetText& text, std::uint64_t seed);

struct ScoreEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    int samples = 0;
};

// Monte-Carlo mean score over random arrangements. Sample i uses a seed
// derived from (seed, i), so results do not depend on evaluation order.
ScoreEstimate estimate_expected_score(const Instance& instance, int samples,
                                      std::uint64_t seed);

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index);

}  // namespace rcs::approx_seq
