#include "rcs/gen.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "rcs/reductions.hpp"

namespace rcs::gen {

Instance tight_example() {
    Instance inst;
    inst.labels = "abcqzwx";
    inst.kind = Kind::Substring;
    auto sym = [&](char c) { return static_cast<Symbol>(inst.labels.find(c)); };
    inst.text.counts.assign(7, 0);
    for (char c : std::string("abcqqqzzzwwwxxx")) ++inst.text.counts[sym(c)];
    for (const char* s : {"abc", "qa", "az", "wqa", "qaz", "azx", "qb", "bz", "wqb", "qbz",
                          "bzx", "qc", "cz", "wqc", "qcz", "czx"}) {
        std::vector<Symbol> syms;
        for (const char* c = s; *c; ++c) syms.push_back(sym(*c));
        inst.patterns.emplace_back(std::move(syms));
    }
    return inst;
}

Instance random_instance(const RandomSpec& spec) {
    if (spec.sigma < 1 || spec.m < 1 || spec.n < 0 || spec.ell < 1 ||
        spec.min_ell < 1 || spec.min_ell > spec.ell)
        throw PreconditionViolated("invalid random instance parameters");
    std::mt19937_64 rng(spec.seed);

    Instance inst;
    inst.kind = spec.kind;
    inst.labels = reductions::default_labels(spec.sigma);
    inst.text.counts.assign(spec.sigma, 0);
    if (spec.text_is_set) {
        inst.text.counts.assign(spec.sigma, 1);
    } else {
        // every symbol appears at least once, the rest uniform
        std::uniform_int_distribution<int> pick(0, spec.sigma - 1);
        if (spec.m < spec.sigma)
            for (int k = 0; k < spec.m; ++k) ++inst.text.counts[pick(rng)];
        else {
            for (int s = 0; s < spec.sigma; ++s) inst.text.counts[s] = 1;
            for (int k = spec.sigma; k < spec.m; ++k) ++inst.text.counts[pick(rng)];
        }
    }
    int m = inst.text.total();

    std::set<std::vector<Symbol>> seen;
    int want = spec.n;
    int attempts = 0;
    std::uniform_int_distribution<int> len_dist(spec.min_ell, std::min(spec.ell, m));
    while (static_cast<int>(seen.size()) < want && attempts < 100 * std::max(1, want)) {
        ++attempts;
        Arrangement arr = inst.text.expand();
        std::shuffle(arr.begin(), arr.end(), rng);
        int len = len_dist(rng);
        std::vector<Symbol> cut;
        if (spec.kind == Kind::Substring) {
            std::uniform_int_distribution<int> start(0, m - len);
            int s = start(rng);
            cut.assign(arr.begin() + s, arr.begin() + s + len);
        } else {
            // random index subset of size len, ascending
            std::vector<int> idx(m);
            for (int i = 0; i < m; ++i) idx[i] = i;
            std::shuffle(idx.begin(), idx.end(), rng);
            idx.resize(len);
            std::sort(idx.begin(), idx.end());
            for (int i : idx) cut.push_back(arr[i]);
        }
        seen.insert(std::move(cut));
    }
    for (const auto& syms : seen) inst.patterns.emplace_back(syms);
    return inst;
}

UndirectedGraph random_undirected(int n, double edge_prob, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(edge_prob);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return UndirectedGraph(n, std::move(edges));
}

Digraph random_digraph(int n, double arc_prob, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(arc_prob);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && coin(rng)) arcs.push_back({u, v});
    return Digraph(n, std::move(arcs));
}

Digraph random_complete_01(int n, double one_prob, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(one_prob);
    std::vector<Arc> arcs;
    std::vector<int> weights;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) {
                arcs.push_back({u, v});
                weights.push_back(coin(rng) ? 1 : 0);
            }
    return Digraph(n, std::move(arcs), std::move(weights));
}

}  // namespace rcs::gen
