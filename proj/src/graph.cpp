#include "rcs/graph.hpp"

#include <algorithm>

namespace rcs {

Digraph::Digraph(int n_, std::vector<Arc> a, std::optional<std::vector<int>> w)
    : n(n_), arcs(std::move(a)), weights(std::move(w)) {
    for (const Arc& arc : arcs) {
        if (arc.from == arc.to) throw PreconditionViolated("self-loop in digraph");
        if (arc.from < 0 || arc.from >= n || arc.to < 0 || arc.to >= n)
            throw PreconditionViolated("arc endpoint out of range");
    }
    if (weights && static_cast<int>(weights->size()) != arc_count())
        throw PreconditionViolated("weight array must parallel the arc list");
    if (weights)
        for (int w01 : *weights)
            if (w01 != 0 && w01 != 1) throw PreconditionViolated("arc weights must be 0/1");
}

bool Digraph::has_arc(int u, int v) const {
    return std::find(arcs.begin(), arcs.end(), Arc{u, v}) != arcs.end();
}

int Digraph::weight_of(const Arc& a) const {
    if (!weights) return 1;
    auto it = std::find(arcs.begin(), arcs.end(), a);
    if (it == arcs.end()) throw PreconditionViolated("arc not in graph");
    return (*weights)[static_cast<std::size_t>(it - arcs.begin())];
}

bool Digraph::is_complete() const {
    if (arc_count() != n * (n - 1)) return false;
    auto sorted = arcs;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

UndirectedGraph::UndirectedGraph(int n_, std::vector<std::pair<int, int>> e)
    : n(n_), edges(std::move(e)) {
    for (auto& [u, v] : edges) {
        if (u == v) throw PreconditionViolated("self-loop in graph");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw PreconditionViolated("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool UndirectedGraph::adjacent(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<std::vector<int>> UndirectedGraph::adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

}  // namespace rcs
