#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "rcs/approx_supersequence.hpp"
#include "rcs/exact.hpp"
#include "rcs/gen.hpp"
#include "rcs/io.hpp"
#include "rcs/oracles.hpp"

using namespace rcs;
using namespace rcs::approx_seq;

namespace {

Instance example2() {
    return instance_from_json(
        R"({"alphabet":"abc","t":"aabc","patterns":["ab","bc","cb","ca"],"kind":"subsequence"})");
}

Instance random_seq2(std::uint64_t seedv) {
    gen::RandomSpec spec;
    spec.sigma = 2 + static_cast<int>(seedv % 5);
    spec.m = 3 + static_cast<int>(seedv % 8);
    spec.n = 1 + static_cast<int>(seedv % 6);
    spec.ell = 2;
    spec.min_ell = 2;
    spec.kind = Kind::Subsequence;
    spec.seed = seedv;
    return gen::random_instance(spec);
}

int patterns_touching_p(const Instance& inst, const PqPartition& part) {
    std::vector<bool> in_p(inst.sigma(), false);
    for (Symbol s : part.p) in_p[s] = true;
    int count = 0;
    for (const auto& p : inst.patterns)
        if (in_p[p.symbols[0]] || in_p[p.symbols[1]]) ++count;
    return count;
}

}  // namespace

TEST_CASE("partition_pq") {
    // t = {a,b,c,d,e,e}
    MultisetText t({1, 1, 1, 1, 2});
    auto part = partition_pq(t);
    CHECK(part.p == std::vector<Symbol>{4});
    CHECK(part.p_prime == std::vector<Symbol>{0, 1, 2, 3});
    CHECK(part.q.total() == 0);

    auto quad = partition_pq(MultisetText({4}));
    CHECK(quad.p == std::vector<Symbol>{0});
    CHECK(quad.p_prime.empty());
    CHECK(quad.q.counts == std::vector<int>{2});

    auto uniq = partition_pq(MultisetText({1, 1, 1}));
    CHECK(uniq.p.empty());
    CHECK(uniq.q.total() == 0);
    CHECK(uniq.p_prime == std::vector<Symbol>{0, 1, 2});
}

TEST_CASE("build_p_prime_graph") {
    Instance ex2 = example2();
    auto part = partition_pq(ex2.text);  // P={a}, P'={b,c}
    auto g = build_p_prime_graph(ex2, part);
    CHECK(g.n == 2);
    CHECK(g.arc_count() == 2);  // bc and cb form a 2-cycle
    CHECK(g.has_arc(0, 1));
    CHECK(g.has_arc(1, 0));

    Instance touching = instance_from_json(
        R"({"alphabet":"ab","t":"aab","patterns":["ab","aa"],"kind":"subsequence"})");
    auto part2 = partition_pq(touching.text);
    CHECK(build_p_prime_graph(touching, part2).arc_count() == 0);

    Instance cyc = instance_from_json(
        R"({"alphabet":"abc","t":"abc","patterns":["ab","bc","ca"],"kind":"subsequence"})");
    auto g3 = build_p_prime_graph(cyc, partition_pq(cyc.text));
    CHECK(g3.n == 3);
    CHECK(g3.arc_count() == 3);
}

TEST_CASE("assemble matches the walkthrough ordering") {
    // t = {a,b,c,d,e,e}, F=e, F'=cadb, Q empty -> ecadbe
    MultisetText t({1, 1, 1, 1, 2});
    auto part = partition_pq(t);
    Arrangement arr = assemble_arrangement(part, {2, 0, 3, 1});
    CHECK(arr == Arrangement{4, 2, 0, 3, 1, 4});
}

TEST_CASE("solve_rcsseq2 attains the optimum on the worked example") {
    Instance ex2 = example2();
    auto rep = solve_rcsseq2(ex2, MasSubroutine::exact_brute());
    CHECK(rep.score >= 3);
    CHECK(is_arrangement_of(rep.arrangement, ex2.text));
}

TEST_CASE("empty P' matches every pattern") {
    Instance inst = instance_from_json(
        R"({"alphabet":"ab","t":"aabb","patterns":["ab","ba","aa","bb"],"kind":"subsequence"})");
    auto rep = solve_rcsseq2(inst, MasSubroutine::exact_brute());
    CHECK(rep.score == 4);
}

TEST_CASE("solve_rcsseq2 enforces preconditions") {
    Instance wrong_kind = instance_from_json(
        R"({"alphabet":"ab","t":"ab","patterns":["ab"],"kind":"substring"})");
    CHECK_THROWS_AS(solve_rcsseq2(wrong_kind, MasSubroutine::exact_brute()),
                    PreconditionViolated);
    Instance wrong_len = instance_from_json(
        R"({"alphabet":"ab","t":"aab","patterns":["aab"],"kind":"subsequence"})");
    CHECK_THROWS_AS(solve_rcsseq2(wrong_len, MasSubroutine::exact_brute()),
                    PreconditionViolated);
}

TEST_CASE("mas_order on small graphs") {
    Digraph two_cycle(2, {{0, 1}, {1, 0}});
    CHECK(mas_order(two_cycle, MasSubroutine::exact_brute()).kept.size() == 1);
    Digraph triangle(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(mas_order(triangle, MasSubroutine::exact_brute()).kept.size() == 2);
    Digraph dag(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(mas_order(dag, MasSubroutine::exact_brute()).kept.size() == 4);
    CHECK_THROWS_AS(mas_order(Digraph(10, {}), MasSubroutine::exact_brute()), SizeLimit);
}

TEST_CASE("every MAS subroutine keeps at least half the arcs") {
    for (std::uint64_t seedv = 0; seedv < 50; ++seedv) {
        auto g = gen::random_digraph(2 + static_cast<int>(seedv % 8), 0.5, seedv);
        for (auto sub : {MasSubroutine::exact_brute(), MasSubroutine::order_vs_reverse(seedv),
                         MasSubroutine::local_search(seedv, 1)}) {
            if (sub.policy == MasSubroutine::Policy::ExactBrute && g.n > 9) continue;
            auto res = mas_order(g, sub);
            CHECK(res.kept == oracles::forward_arcs(g, res.order));
            CHECK(2 * static_cast<int>(res.kept.size()) >= g.arc_count());
        }
    }
}

TEST_CASE("compute_delta") {
    Instance inst = instance_from_json(
        R"({"alphabet":"abc","t":"aabbcc","patterns":["ab","bc","cb","ca"],"kind":"subsequence"})");
    CHECK(compute_delta(inst.patterns, 3) == 3);
    CHECK(compute_delta({inst.patterns[0]}, 3) == 1);
    Pattern aa(std::vector<Symbol>{0, 0});
    CHECK(compute_delta({aa}, 1) == 2);
}

TEST_CASE("random_arrangement is uniform") {
    CHECK(random_arrangement(MultisetText({1}), 3) == Arrangement{0});
    CHECK(random_arrangement(MultisetText({2}), 5) == Arrangement{0, 0});
    std::map<Arrangement, int> freq;
    const int draws = 10000;
    for (int i = 0; i < draws; ++i) ++freq[random_arrangement(MultisetText({1, 1}), derive_seed(9, i))];
    CHECK(freq.size() == 2);
    for (const auto& [arr, count] : freq)
        CHECK(std::abs(count / static_cast<double>(draws) - 0.5) < 0.05);
}

TEST_CASE("estimate_expected_score") {
    Instance ex2 = example2();
    auto est = estimate_expected_score(ex2, 10000, 42);
    // |S|/2! minus a 3-sigma margin (ell = 2)
    CHECK(est.mean >= 4.0 / 2.0 - 3.0 * est.std_error);

    Instance single = instance_from_json(
        R"({"alphabet":"ab","t":"ab","patterns":["ba"],"kind":"subsequence"})");
    CHECK(estimate_expected_score(single, 200, 1).mean <= 1.0);

    Instance empty = instance_from_json(
        R"({"alphabet":"ab","t":"ab","patterns":[],"kind":"subsequence"})");
    CHECK(estimate_expected_score(empty, 50, 1).mean == 0.0);
}

TEST_CASE("per-pattern containment frequency matches 1/ell! at 3 sigma") {
    for (std::uint64_t seedv = 0; seedv < 5; ++seedv) {
        gen::RandomSpec spec;
        spec.sigma = 3;
        spec.m = 6;
        spec.n = 4;
        spec.ell = 3;
        spec.kind = Kind::Subsequence;
        spec.seed = seedv;
        Instance inst = gen::random_instance(spec);
        const int samples = 10000;
        std::vector<int> hits(inst.pattern_count(), 0);
        for (int i = 0; i < samples; ++i) {
            auto arr = random_arrangement(inst.text, derive_seed(seedv, i));
            for (int p = 0; p < inst.pattern_count(); ++p)
                if (contains_subsequence(arr, inst.patterns[p])) ++hits[p];
        }
        for (int p = 0; p < inst.pattern_count(); ++p) {
            double freq = hits[p] / static_cast<double>(samples);
            double bound = 1.0;
            for (int k = 2; k <= inst.patterns[p].length(); ++k) bound /= k;
            double se = std::sqrt(freq * (1 - freq) / samples);
            CHECK(freq >= bound - 3 * se - 1e-12);
        }
    }
}

TEST_CASE("arrangement identity and the containment invariant") {
    for (std::uint64_t seedv = 0; seedv < 200; ++seedv) {
        Instance inst = random_seq2(seedv);
        if (inst.patterns.empty()) continue;
        auto part = partition_pq(inst.text);
        auto g = build_p_prime_graph(inst, part);
        auto order = mas_order(g, g.n <= 9 ? MasSubroutine::exact_brute()
                                           : MasSubroutine::order_vs_reverse(seedv));
        Arrangement arr = assemble_arrangement(part, order.order);
        CHECK(is_arrangement_of(arr, inst.text));

        // every pattern touching P is a subsequence of F.F'.F already
        Arrangement ffp(arr.begin(), arr.end() - part.q.total());
        std::vector<bool> in_p(inst.sigma(), false);
        for (Symbol s : part.p) in_p[s] = true;
        for (const auto& p : inst.patterns)
            if (in_p[p.symbols[0]] || in_p[p.symbols[1]])
                CHECK(contains_subsequence(ffp, p));
    }
}

TEST_CASE("exact-MAS decomposition and upper bound by the optimum") {
    for (std::uint64_t seedv = 0; seedv < 80; ++seedv) {
        Instance inst = random_seq2(seedv + 500);
        if (inst.patterns.empty() || inst.text.total() > 8) continue;
        auto part = partition_pq(inst.text);
        auto g = build_p_prime_graph(inst, part);
        if (g.n > 9) continue;
        auto rep = solve_rcsseq2(inst, MasSubroutine::exact_brute());
        int touching = patterns_touching_p(inst, part);
        int mas_size = static_cast<int>(oracles::max_acyclic_subgraph_exact(g).kept.size());
        CHECK(rep.score == touching + mas_size);
        auto exact = solve_exact(inst);
        REQUIRE(exact.proven_optimal);
        CHECK(rep.score <= exact.report.score);
    }
}
