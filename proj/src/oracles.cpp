#include "rcs/oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace rcs::oracles {

namespace {

std::vector<std::vector<int>> weight_matrix(const Digraph& g) {
    std::vector<std::vector<int>> w(g.n, std::vector<int>(g.n, 0));
    for (std::size_t i = 0; i < g.arcs.size(); ++i)
        w[g.arcs[i].from][g.arcs[i].to] = g.weights ? (*g.weights)[i] : 1;
    return w;
}

void require_complete(const Digraph& g) {
    if (!g.is_complete()) throw PreconditionViolated("digraph must be complete");
}

}  // namespace

std::vector<Arc> forward_arcs(const Digraph& g, const std::vector<int>& order) {
    std::vector<int> pos(g.n, -1);
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    std::vector<Arc> kept;
    for (const Arc& a : g.arcs)
        if (pos[a.from] < pos[a.to]) kept.push_back(a);
    return kept;
}

std::vector<int> max_clique_exact(const UndirectedGraph& g) {
    if (g.n > 20) throw SizeLimit("max_clique_exact limited to n <= 20");
    std::vector<std::uint32_t> adj(g.n, 0);
    for (auto [u, v] : g.edges) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    std::uint32_t best = 0;
    int best_size = 0;

    // Bron-Kerbosch with pivot
    auto rec = [&](auto&& self, std::uint32_t r, std::uint32_t p, std::uint32_t x) -> void {
        if (p == 0 && x == 0) {
            int size = std::popcount(r);
            if (size > best_size) {
                best_size = size;
                best = r;
            }
            return;
        }
        std::uint32_t px = p | x;
        int pivot = std::countr_zero(px);
        for (std::uint32_t q = px; q; q &= q - 1) {
            int v = std::countr_zero(q);
            if (std::popcount(p & adj[v]) > std::popcount(p & adj[pivot])) pivot = v;
        }
        std::uint32_t cand = p & ~adj[pivot];
        for (std::uint32_t q = cand; q; q &= q - 1) {
            int v = std::countr_zero(q);
            std::uint32_t bit = 1u << v;
            self(self, r | bit, p & adj[v], x & adj[v]);
            p &= ~bit;
            x |= bit;
        }
    };
    if (g.n > 0) rec(rec, 0, (g.n == 32 ? ~0u : (1u << g.n) - 1), 0);

    std::vector<int> clique;
    for (int v = 0; v < g.n; ++v)
        if (best & (1u << v)) clique.push_back(v);
    return clique;
}

MasResult max_acyclic_subgraph_exact(const Digraph& g) {
    if (g.n > 9) throw SizeLimit("max_acyclic_subgraph_exact limited to n <= 9");
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> best_order = order;
    int best = -1;
    std::vector<int> pos(g.n);
    do {
        for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
        int kept = 0;
        for (const Arc& a : g.arcs)
            if (pos[a.from] < pos[a.to]) ++kept;
        if (kept > best) {
            best = kept;
            best_order = order;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return {best_order, forward_arcs(g, best_order)};
}

HamiltonianResult max_atsp_exact(const Digraph& g) {
    require_complete(g);
    if (g.n > 13) throw SizeLimit("max_atsp_exact limited to n <= 13");
    int n = g.n;
    if (n == 1) return {{0}, 0, true};
    auto w = weight_matrix(g);
    const int NEG = -1'000'000;
    int full = 1 << n;
    // dp[mask][v]: max weight path from vertex 0 over `mask`, ending at v
    std::vector<std::vector<int>> dp(full, std::vector<int>(n, NEG));
    std::vector<std::vector<int>> parent(full, std::vector<int>(n, -1));
    dp[1][0] = 0;
    for (int mask = 1; mask < full; ++mask) {
        if (!(mask & 1)) continue;
        for (int v = 0; v < n; ++v) {
            if (dp[mask][v] == NEG) continue;
            for (int u = 0; u < n; ++u) {
                if (mask & (1 << u)) continue;
                int nm = mask | (1 << u);
                int cand = dp[mask][v] + w[v][u];
                if (cand > dp[nm][u]) {
                    dp[nm][u] = cand;
                    parent[nm][u] = v;
                }
            }
        }
    }
    int best = NEG, best_end = 0;
    for (int v = 1; v < n; ++v) {
        int cand = dp[full - 1][v] + w[v][0];
        if (cand > best) {
            best = cand;
            best_end = v;
        }
    }
    std::vector<int> order;
    int mask = full - 1, v = best_end;
    while (v != -1) {
        order.push_back(v);
        int pv = parent[mask][v];
        mask ^= 1 << v;
        v = pv;
    }
    std::reverse(order.begin(), order.end());
    return {order, best, true};
}

HamiltonianResult max_atsp_greedy(const Digraph& g) {
    require_complete(g);
    int n = g.n;
    if (n == 1) return {{0}, 0, true};
    auto w = weight_matrix(g);
    struct Cand {
        int weight, u, v;
    };
    std::vector<Cand> cands;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) cands.push_back({w[u][v], u, v});
    std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    std::vector<int> succ(n, -1), pred(n, -1), tail(n);
    std::iota(tail.begin(), tail.end(), 0);  // tail[head of path] = its end
    int chosen = 0;
    for (const Cand& c : cands) {
        if (chosen == n - 1) break;
        if (succ[c.u] != -1 || pred[c.v] != -1) continue;
        // find head of the path containing u; reject if it closes a subcycle
        int head = c.u;
        while (pred[head] != -1) head = pred[head];
        if (tail[head] == c.u && head == c.v) continue;
        succ[c.u] = c.v;
        pred[c.v] = c.u;
        // v's path end becomes the new tail of u's path head
        int vtail = c.v;
        while (succ[vtail] != -1) vtail = succ[vtail];
        tail[head] = vtail;
        ++chosen;
    }
    int head = 0;
    while (pred[head] != -1) head = pred[head];
    std::vector<int> order;
    for (int v = head; v != -1; v = succ[v]) order.push_back(v);
    int weight = 0;
    for (int i = 0; i + 1 < n; ++i) weight += w[order[i]][order[i + 1]];
    weight += w[order[n - 1]][order[0]];
    return {order, weight, true};
}

std::vector<Symbol> scs_exact(const std::vector<Pattern>& patterns, int sigma) {
    // drop patterns contained in others (ties: keep the earlier one)
    std::vector<Pattern> kept;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        bool contained = false;
        for (std::size_t j = 0; j < patterns.size() && !contained; ++j) {
            if (i == j) continue;
            if (patterns[i].symbols == patterns[j].symbols) {
                contained = j < i;
            } else if (contains_substring(patterns[j].symbols, patterns[i])) {
                contained = true;
            }
        }
        if (!contained) kept.push_back(patterns[i]);
    }
    if (kept.empty()) return {};
    int n = static_cast<int>(kept.size());
    if (n > 8) throw SizeLimit("scs_exact limited to 8 patterns");
    (void)sigma;

    auto overlap = [&](const Pattern& a, const Pattern& b) {
        int max = std::min(a.length(), b.length());
        for (int len = max; len > 0; --len) {
            if (std::equal(a.symbols.end() - len, a.symbols.end(), b.symbols.begin()))
                return len;
        }
        return 0;
    };
    std::vector<std::vector<int>> ov(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) ov[i][j] = overlap(kept[i], kept[j]);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Symbol> best;
    do {
        std::vector<Symbol> cur = kept[perm[0]].symbols;
        for (int i = 1; i < n; ++i) {
            int o = ov[perm[i - 1]][perm[i]];
            const auto& s = kept[perm[i]].symbols;
            cur.insert(cur.end(), s.begin() + o, s.end());
        }
        if (best.empty() || cur.size() < best.size()) best = std::move(cur);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace rcs::oracles
