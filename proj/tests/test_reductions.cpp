#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "rcs/gen.hpp"
#include "rcs/io.hpp"
#include "rcs/oracles.hpp"
#include "rcs/reductions.hpp"

using namespace rcs;
using namespace rcs::reductions;

namespace {

UndirectedGraph triangle() { return UndirectedGraph(3, {{0, 1}, {0, 2}, {1, 2}}); }

// maximum Hamiltonian-path weight by brute force (for the 0/1 ATSP reduction)
int best_path_weight(const Digraph& g) {
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    int best = 0;
    do {
        int w = 0;
        for (int i = 0; i + 1 < g.n; ++i) w += g.weight_of(Arc{perm[i], perm[i + 1]});
        best = std::max(best, w);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

TEST_CASE("clique_to_rcsstr builds the expected instance") {
    Instance inst = clique_to_rcsstr(triangle());
    CHECK(inst.labels == "abc");
    CHECK(inst.kind == Kind::Substring);
    CHECK(inst.text.counts == std::vector<int>{3, 3, 3});
    REQUIRE(inst.pattern_count() == 3);
    auto pat_str = [](const Instance& i, int p) { return i.render(i.patterns[p].symbols); };
    // no non-neighbors in K3: pattern i is v_i^3
    CHECK(pat_str(inst, 0) == "aaa");
    CHECK(pat_str(inst, 1) == "bbb");
    CHECK(pat_str(inst, 2) == "ccc");

    UndirectedGraph path(3, {{0, 1}, {1, 2}});
    Instance pinst = clique_to_rcsstr(path);
    CHECK(pat_str(pinst, 0) == "aaac");  // c is a's non-neighbor
    CHECK(pat_str(pinst, 1) == "bbb");
    CHECK(pat_str(pinst, 2) == "ccca");

    Instance single = clique_to_rcsstr(UndirectedGraph(1, {}));
    CHECK(pat_str(single, 0) == "a");
    CHECK(single.text.counts == std::vector<int>{1});
}

TEST_CASE("clique certificates map both ways") {
    UndirectedGraph path(3, {{0, 1}, {1, 2}});
    Instance inst = clique_to_rcsstr(path);

    Arrangement arr = clique_to_arrangement(path, {0, 1});
    CHECK(is_arrangement_of(arr, inst.text));
    CHECK(score_arrangement(inst, arr).score >= 2);
    CHECK(arrangement_to_clique(path, arr).size() >= 2);

    CHECK_THROWS_AS(clique_to_arrangement(path, {0, 2}), NotAClique);
}

TEST_CASE("optimum of the clique reduction equals the max clique") {
    for (std::uint64_t seedv = 0; seedv < 30; ++seedv) {
        auto g = gen::random_undirected(2 + static_cast<int>(seedv % 3), 0.5, seedv);
        Instance inst = clique_to_rcsstr(g);
        auto res = solve_exact(inst);
        REQUIRE(res.proven_optimal);
        int omega = static_cast<int>(oracles::max_clique_exact(g).size());
        CHECK(res.report.score == omega);
        auto clique = arrangement_to_clique(g, res.report.arrangement);
        CHECK(static_cast<int>(clique.size()) == omega);
    }
}

TEST_CASE("arrangement_to_clique holds for arbitrary arrangements") {
    std::mt19937_64 rng(5);
    for (std::uint64_t seedv = 0; seedv < 60; ++seedv) {
        auto g = gen::random_undirected(2 + static_cast<int>(seedv % 4), 0.5, seedv + 40);
        Instance inst = clique_to_rcsstr(g);
        Arrangement arr = inst.text.expand();
        std::shuffle(arr.begin(), arr.end(), rng);
        auto clique = arrangement_to_clique(g, arr);  // throws on invariant failure
        for (int u : clique)
            for (int v : clique)
                if (u < v) CHECK(g.adjacent(u, v));
    }
}

TEST_CASE("atsp01_to_rcsstr2 builds a set instance from the 1-arcs") {
    auto g = gen::random_complete_01(4, 0.5, 3);
    Instance inst = atsp01_to_rcsstr2(g);
    CHECK(inst.kind == Kind::Substring);
    CHECK(inst.text.counts == std::vector<int>(4, 1));
    int ones = 0;
    for (std::size_t i = 0; i < g.arcs.size(); ++i)
        if ((*g.weights)[i] == 1) ++ones;
    CHECK(inst.pattern_count() == ones);
    for (const auto& p : inst.patterns) {
        REQUIRE(p.length() == 2);
        CHECK(g.weight_of(Arc{p.symbols[0], p.symbols[1]}) == 1);
    }
}

TEST_CASE("digraph_to_rcsseq2 worked instances agree with the exact solver") {
    Digraph two_cycle(2, {{0, 1}, {1, 0}});
    Instance a = digraph_to_rcsseq2(two_cycle);
    CHECK(a.kind == Kind::Subsequence);
    CHECK(solve_exact(a).report.score == 1);

    Digraph dag(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(solve_exact(digraph_to_rcsseq2(dag)).report.score == 4);

    Digraph triangle_d(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(solve_exact(digraph_to_rcsseq2(triangle_d)).report.score == 2);

    // duplicate arcs collapse to one pattern
    Digraph dup(2, {{0, 1}, {0, 1}});
    CHECK(digraph_to_rcsseq2(dup).pattern_count() == 1);
}

TEST_CASE("optimum of the MAS reduction equals the exact MAS") {
    for (std::uint64_t seedv = 0; seedv < 30; ++seedv) {
        auto g = gen::random_digraph(2 + static_cast<int>(seedv % 5), 0.5, seedv);
        Instance inst = digraph_to_rcsseq2(g);
        auto res = solve_exact(inst);
        REQUIRE(res.proven_optimal);
        CHECK(res.report.score ==
              static_cast<int>(oracles::max_acyclic_subgraph_exact(g).kept.size()));
    }
}

TEST_CASE("0/1 ATSP reduction optimum equals the best Hamiltonian path weight") {
    for (std::uint64_t seedv = 0; seedv < 20; ++seedv) {
        auto g = gen::random_complete_01(2 + static_cast<int>(seedv % 5), 0.5, seedv + 9);
        Instance inst = atsp01_to_rcsstr2(g);
        auto res = solve_exact(inst);
        REQUIRE(res.proven_optimal);
        CHECK(res.report.score == best_path_weight(g));
    }
}

TEST_CASE("is_complete") {
    Instance yes = instance_from_json(
        R"({"alphabet":"ab","t":"ab","patterns":["ab"],"kind":"substring"})");
    CHECK(is_complete(yes));
    Instance no = instance_from_json(
        R"({"alphabet":"ab","t":"ab","patterns":["ab","ba"],"kind":"substring"})");
    CHECK_FALSE(is_complete(no));
    SearchConfig tiny;
    tiny.node_budget = 1;
    Instance big = gen::tight_example();
    CHECK_THROWS_AS(is_complete(big, tiny), BudgetExhausted);
}

TEST_CASE("binary SCS driver on worked sets") {
    auto pat = [](std::initializer_list<int> s) { return Pattern(std::vector<Symbol>(s)); };
    auto r = binary_scs_driver({pat({0}), pat({1})});
    CHECK(r.length == 2);
    r = binary_scs_driver({pat({0, 1}), pat({1, 0})});
    CHECK(r.length == 3);
    r = binary_scs_driver({pat({0, 0}), pat({1, 1})});
    CHECK(r.length == 4);
    r = binary_scs_driver({pat({0, 1, 0})});
    CHECK(r.length == 3);
}

TEST_CASE("binary SCS driver matches the brute-force SCS") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 40; ++it) {
        int n = 1 + static_cast<int>(rng() % 3);
        std::set<std::vector<Symbol>> pats;
        while (static_cast<int>(pats.size()) < n) {
            int len = 1 + static_cast<int>(rng() % 3);
            std::vector<Symbol> p(len);
            for (auto& s : p) s = static_cast<Symbol>(rng() % 2);
            pats.insert(p);
        }
        std::vector<Pattern> patterns;
        for (const auto& p : pats) patterns.emplace_back(p);

        auto res = binary_scs_driver(patterns);
        for (const auto& p : patterns) CHECK(contains_substring(res.superstring, p));
        CHECK(res.length == static_cast<int>(res.superstring.size()));
        CHECK(res.length == static_cast<int>(oracles::scs_exact(patterns, 2).size()));

        // call budget: at most (n*ell + 1)^2 solver invocations
        long long total = 0;
        for (const auto& p : patterns) total += p.length();
        CHECK(res.solver_calls <= (total + 1) * (total + 1));

        auto bisect = binary_scs_driver(patterns, {}, true);
        CHECK(bisect.length == res.length);
        CHECK(bisect.solver_calls <= (total + 1) * (total + 1));
    }
}

TEST_CASE("default_labels caps at the printable charset") {
    CHECK(default_labels(3) == "abc");
    CHECK(default_labels(62).size() == 62);
    CHECK_THROWS_AS(default_labels(63), SizeLimit);
}
