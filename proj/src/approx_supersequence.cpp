#include "rcs/approx_supersequence.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>

#include "rcs/oracles.hpp"

namespace rcs::approx_seq {

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
    // splitmix64 over root + index
    std::uint64_t z = root + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

PqPartition partition_pq(const MultisetText& text) {
    PqPartition part;
    part.q.counts.assign(text.counts.size(), 0);
    for (int s = 0; s < text.sigma(); ++s) {
        if (text.counts[s] >= 2) {
            part.p.push_back(s);
            part.q.counts[s] = text.counts[s] - 2;
        } else if (text.counts[s] == 1) {
            part.p_prime.push_back(s);
        }
    }
    return part;
}

Digraph build_p_prime_graph(const Instance& instance, const PqPartition& partition) {
    if (instance.kind != Kind::Subsequence)
        throw PreconditionViolated("build_p_prime_graph requires a subsequence instance");
    std::vector<int> vertex_of(instance.sigma(), -1);
    for (std::size_t i = 0; i < partition.p_prime.size(); ++i)
        vertex_of[partition.p_prime[i]] = static_cast<int>(i);
    std::vector<Arc> arcs;
    for (const auto& p : instance.patterns) {
        if (p.length() != 2)
            throw PreconditionViolated("build_p_prime_graph requires length-2 patterns");
        int a = vertex_of[p.symbols[0]];
        int b = vertex_of[p.symbols[1]];
        if (a >= 0 && b >= 0 && a != b) arcs.push_back({a, b});
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    return Digraph(static_cast<int>(partition.p_prime.size()), std::move(arcs));
}

namespace {

int forward_count(const Digraph& g, const std::vector<int>& order) {
    return static_cast<int>(oracles::forward_arcs(g, order).size());
}

std::vector<int> better_of_order_and_reverse(const Digraph& g, std::vector<int> order) {
    std::vector<int> rev(order.rbegin(), order.rend());
    return forward_count(g, order) >= forward_count(g, rev) ? order : rev;
}

// single-vertex reinsertion until no improvement, capped at 2|V| passes
std::vector<int> local_search(const Digraph& g, std::vector<int> order, int max_rounds) {
    int n = g.n;
    int cap = 2 * n * std::max(1, max_rounds);
    for (int round = 0; round < cap; ++round) {
        int cur = forward_count(g, order);
        bool improved = false;
        for (int i = 0; i < n && !improved; ++i) {
            for (int j = 0; j < n && !improved; ++j) {
                if (i == j) continue;
                std::vector<int> cand = order;
                int v = cand[i];
                cand.erase(cand.begin() + i);
                cand.insert(cand.begin() + j, v);
                if (forward_count(g, cand) > cur) {
                    order = std::move(cand);
                    improved = true;
                }
            }
        }
        if (!improved) break;
    }
    return order;
}

}  // namespace

MasOrder mas_order(const Digraph& graph, const MasSubroutine& sub) {
    std::vector<int> order;
    switch (sub.policy) {
        case MasSubroutine::Policy::ExactBrute: {
            if (graph.n > 9) throw SizeLimit("ExactBrute MAS limited to n <= 9");
            order = oracles::max_acyclic_subgraph_exact(graph).order;
            break;
        }
        case MasSubroutine::Policy::OrderVsReverse: {
            std::vector<int> base(graph.n);
            std::iota(base.begin(), base.end(), 0);
            std::mt19937_64 rng(sub.seed);
            std::shuffle(base.begin(), base.end(), rng);
            order = better_of_order_and_reverse(graph, std::move(base));
            break;
        }
        case MasSubroutine::Policy::LocalSearch: {
            std::vector<int> base(graph.n);
            std::iota(base.begin(), base.end(), 0);
            std::mt19937_64 rng(sub.seed);
            std::shuffle(base.begin(), base.end(), rng);
            order = local_search(graph, better_of_order_and_reverse(graph, std::move(base)),
                                 sub.passes);
            break;
        }
    }
    return {order, oracles::forward_arcs(graph, order)};
}

Arrangement assemble_arrangement(const PqPartition& partition,
                                 const std::vector<int>& p_prime_order) {
    if (p_prime_order.size() != partition.p_prime.size())
        throw PreconditionViolated("p_prime_order must cover all of P'");
    Arrangement arr;
    arr.insert(arr.end(), partition.p.begin(), partition.p.end());
    for (int v : p_prime_order) arr.push_back(partition.p_prime[v]);
    arr.insert(arr.end(), partition.p.begin(), partition.p.end());
    for (Symbol s : partition.q.expand()) arr.push_back(s);
    return arr;
}

SolutionReport solve_rcsseq2(const Instance& instance, const MasSubroutine& mas) {
    if (instance.kind != Kind::Subsequence)
        throw PreconditionViolated("solve_rcsseq2 requires a subsequence instance");
    for (const auto& p : instance.patterns)
        if (p.length() != 2)
            throw PreconditionViolated("solve_rcsseq2 requires length-2 patterns");
    auto t0 = std::chrono::steady_clock::now();

    PqPartition part = partition_pq(instance.text);
    Digraph g = build_p_prime_graph(instance, part);
    MasOrder order = mas_order(g, mas);
    Arrangement arr = assemble_arrangement(part, order.order);

    SolutionReport rep = score_arrangement(instance, arr);
    rep.algorithm = "rcsseq2";
    if (mas.policy != MasSubroutine::Policy::ExactBrute) rep.seed = mas.seed;
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

int compute_delta(const std::vector<Pattern>& patterns, int sigma) {
    std::vector<int> occ(sigma, 0);
    for (const auto& p : patterns)
        for (Symbol s : p.symbols) ++occ[s];
    return occ.empty() ? 0 : *std::max_element(occ.begin(), occ.end());
}

Arrangement random_arrangement(const MultisetText& text, std::uint64_t seed) {
    Arrangement arr = text.expand();
    std::mt19937_64 rng(seed);
    std::shuffle(arr.begin(), arr.end(), rng);
    return arr;
}

ScoreEstimate estimate_expected_score(const Instance& instance, int samples,
                                      std::uint64_t seed) {
    if (samples < 1) throw PreconditionViolated("samples must be >= 1");
    double sum = 0.0, sumsq = 0.0;
    for (int i = 0; i < samples; ++i) {
        Arrangement arr = random_arrangement(instance.text, derive_seed(seed, i));
        double sc = score_arrangement(instance, arr).score;
        sum += sc;
        sumsq += sc * sc;
    }
    ScoreEstimate est;
    est.samples = samples;
    est.mean = sum / samples;
    if (samples > 1) {
        double var = (sumsq - sum * sum / samples) / (samples - 1);
        est.std_error = std::sqrt(std::max(0.0, var) / samples);
    }
    return est;
}

}  // namespace rcs::approx_seq
