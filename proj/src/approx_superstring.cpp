#include "rcs/approx_superstring.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>

namespace rcs::approx_str {

namespace {

std::vector<int> selection_order(const Instance& inst, const OrderStrategy& strategy) {
    std::vector<int> order(inst.pattern_count());
    std::iota(order.begin(), order.end(), 0);
    switch (strategy.policy) {
        case OrderStrategy::Policy::InputOrder:
            break;
        case OrderStrategy::Policy::LongestFirst:
            std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
                return inst.patterns[a].length() > inst.patterns[b].length();
            });
            break;
        case OrderStrategy::Policy::ShortestFirst:
            std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
                return inst.patterns[a].length() < inst.patterns[b].length();
            });
            break;
        case OrderStrategy::Policy::Random: {
            std::mt19937_64 rng(strategy.seed);
            std::shuffle(order.begin(), order.end(), rng);
            break;
        }
    }
    return order;
}

}  // namespace

GreedyResult greedy_maximal_concat_detail(const Instance& instance,
                                          const OrderStrategy& strategy) {
    if (instance.kind != Kind::Substring)
        throw PreconditionViolated("greedy_maximal_concat requires a substring instance");
    auto t0 = std::chrono::steady_clock::now();

    GreedyResult result;
    std::vector<int>& budget = result.leftover;
    budget = instance.text.counts;
    Arrangement prefix;
    for (int i : selection_order(instance, strategy)) {
        auto need = instance.patterns[i].count_vector(instance.sigma());
        bool fits = true;
        for (int s = 0; s < instance.sigma(); ++s)
            if (need[s] > budget[s]) {
                fits = false;
                break;
            }
        if (!fits) continue;
        for (int s = 0; s < instance.sigma(); ++s) budget[s] -= need[s];
        result.chosen.push_back(i);
        prefix.insert(prefix.end(), instance.patterns[i].symbols.begin(),
                      instance.patterns[i].symbols.end());
    }
    Arrangement arr = prefix;
    for (int s = 0; s < instance.sigma(); ++s)
        for (int k = 0; k < budget[s]; ++k) arr.push_back(s);

    result.report = score_arrangement(instance, arr);
    result.report.algorithm = "greedy-concat";
    if (strategy.policy == OrderStrategy::Policy::Random) result.report.seed = strategy.seed;
    result.report.elapsed_ms = std::chrono::duration<double, std::milli>(
                                   std::chrono::steady_clock::now() - t0)
                                   .count();
    return result;
}

SolutionReport greedy_maximal_concat(const Instance& instance, const OrderStrategy& strategy) {
    return greedy_maximal_concat_detail(instance, strategy).report;
}

long long alg1_bound(int ell, int q, bool substring_free) {
    if (ell < 1 || q < 0) throw PreconditionViolated("alg1_bound requires ell >= 1, q >= 0");
    long long l = ell;
    if (substring_free) return q * l * l;
    return q * (l * (l * (l + 1) / 2 - 1));
}

bool is_substring_free(const std::vector<Pattern>& patterns) {
    for (std::size_t i = 0; i < patterns.size(); ++i)
        for (std::size_t j = 0; j < patterns.size(); ++j)
            if (i != j && contains_substring(patterns[j].symbols, patterns[i])) return false;
    return true;
}

Digraph pair_graph(const Instance& instance) {
    int n = instance.sigma();
    std::vector<std::vector<int>> w(n, std::vector<int>(n, 0));
    for (const auto& p : instance.patterns) {
        if (p.length() != 2)
            throw PreconditionViolated("pair_graph requires length-2 patterns");
        if (p.symbols[0] != p.symbols[1]) w[p.symbols[0]][p.symbols[1]] = 1;
    }
    std::vector<Arc> arcs;
    std::vector<int> weights;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) {
                arcs.push_back({u, v});
                weights.push_back(w[u][v]);
            }
    return Digraph(n, std::move(arcs), std::move(weights));
}

SolutionReport solve_rcsstr2_set(const Instance& instance, AtspSubroutine sub) {
    if (instance.kind != Kind::Substring)
        throw PreconditionViolated("solve_rcsstr2_set requires a substring instance");
    for (int c : instance.text.counts)
        if (c != 1) throw PreconditionViolated("solve_rcsstr2_set requires t to be a set");
    for (const auto& p : instance.patterns)
        if (p.length() != 2 || p.symbols[0] == p.symbols[1])
            throw PreconditionViolated(
                "solve_rcsstr2_set requires length-2 patterns over distinct symbols");
    auto t0 = std::chrono::steady_clock::now();

    Digraph g = pair_graph(instance);
    oracles::HamiltonianResult cycle = sub == AtspSubroutine::ExactHeldKarp
                                           ? oracles::max_atsp_exact(g)
                                           : oracles::max_atsp_greedy(g);
    int n = instance.sigma();
    std::vector<std::vector<int>> w(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < g.arcs.size(); ++i)
        w[g.arcs[i].from][g.arcs[i].to] = (*g.weights)[i];

    // rotate the cycle to start right after a 0-arc, if any
    int cut = -1;
    for (int i = 0; i < n; ++i) {
        int u = cycle.order[i];
        int v = cycle.order[(i + 1) % n];
        if (n > 1 && w[u][v] == 0) {
            cut = i;
            break;
        }
    }
    Arrangement arr;
    if (cut < 0) {
        // all cycle arcs weigh 1; drop the closing arc
        arr.assign(cycle.order.begin(), cycle.order.end());
    } else {
        for (int k = 1; k <= n; ++k) arr.push_back(cycle.order[(cut + k) % n]);
    }

    SolutionReport rep = score_arrangement(instance, arr);
    rep.algorithm = sub == AtspSubroutine::ExactHeldKarp ? "atsp2-exact" : "atsp2-greedy";
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

}  // namespace rcs::approx_str
