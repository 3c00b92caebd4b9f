#pragma once

#include <cstdint>

#include "rcs/core.hpp"
#include "rcs/graph.hpp"

// Instance generators behind `gen` and the bench harness.
namespace rcs::gen {

// The worst case for the maximal-concatenation algorithm at ell = 3:
// t = {a,b,c,q^3,z^3,w^3,x^3}, 16 patterns, optimum 15, greedy-from-abc 1.
Instance tight_example();

struct RandomSpec {
    int sigma = 3;
    int m = 8;           // text length
    int n = 5;           // requested pattern count (reduced if duplicates persist)
    int ell = 2;         // max pattern length
    int min_ell = 1;     // set to ell for fixed-length patterns
    bool text_is_set = false;  // t drawn as a set (forces m = sigma)
    Kind kind = Kind::Substring;
    std::uint64_t seed = 0;
};

// Patterns are cut from a random arrangement of the text (substrings or
// subsequences per kind), so the instance is valid by construction.
// Duplicate cuts are re-drawn up to 100 times, then n is reduced.
Instance random_instance(const RandomSpec& spec);

UndirectedGraph random_undirected(int n, double edge_prob, std::uint64_t seed);
Digraph random_digraph(int n, double arc_prob, std::uint64_t seed);
Digraph random_complete_01(int n, double one_prob, std::uint64_t seed);

}  // namespace rcs::gen
