#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rcs/core.hpp"

namespace rcs {

struct Arc {
    int from = 0;
    int to = 0;
    bool operator==(const Arc&) const = default;
    auto operator<=>(const Arc&) const = default;
};

// Simple directed graph, optionally with 0/1 arc weights (parallel array).
struct Digraph {
    int n = 0;
    std::vector<Arc> arcs;
    std::optional<std::vector<int>> weights;

    Digraph() = default;
    Digraph(int n_, std::vector<Arc> a, std::optional<std::vector<int>> w = std::nullopt);

    int arc_count() const { return static_cast<int>(arcs.size()); }
    bool has_arc(int u, int v) const;
    int weight_of(const Arc& a) const;  // 1 when no weight array
    bool is_complete() const;           // every ordered pair present
};

struct UndirectedGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // stored with first < second

    UndirectedGraph() = default;
    UndirectedGraph(int n_, std::vector<std::pair<int, int>> e);

    bool adjacent(int u, int v) const;
    std::vector<std::vector<int>> adjacency() const;
};

}  // namespace rcs
