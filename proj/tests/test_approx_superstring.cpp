#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "rcs/approx_superstring.hpp"
#include "rcs/exact.hpp"
#include "rcs/gen.hpp"
#include "rcs/io.hpp"

using namespace rcs;
using namespace rcs::approx_str;

namespace {

Instance example1_reordered() {
    // selection order (aca, abb, bbc, cba)
    return instance_from_json(
        R"({"alphabet":"abc","t":"aabbcc","patterns":["aca","abb","bbc","cba"],"kind":"substring"})");
}

}  // namespace

TEST_CASE("greedy picks only abc on the worst-case instance") {
    Instance inst = gen::tight_example();
    auto res = greedy_maximal_concat_detail(inst, OrderStrategy::input_order());
    CHECK(res.chosen == std::vector<int>{0});
    CHECK(res.report.score == 1);
}

TEST_CASE("greedy on the first worked example") {
    Instance inst = example1_reordered();
    auto res = greedy_maximal_concat_detail(inst, OrderStrategy::input_order());
    CHECK(res.chosen == std::vector<int>{0, 2});  // aca then bbc
    CHECK(inst.render(res.report.arrangement) == "acabbc");
    CHECK(res.report.score == 3);  // scorer also finds abb
}

TEST_CASE("greedy scores 1 on a single reordered-text pattern") {
    Instance inst = instance_from_json(
        R"({"alphabet":"ab","t":"aab","patterns":["baa"],"kind":"substring"})");
    CHECK(greedy_maximal_concat(inst, OrderStrategy::input_order()).score == 1);
}

TEST_CASE("greedy choice fits the budget and is maximal") {
    for (std::uint64_t seedv = 0; seedv < 100; ++seedv) {
        gen::RandomSpec spec;
        spec.sigma = 2 + static_cast<int>(seedv % 3);
        spec.m = 4 + static_cast<int>(seedv % 7);
        spec.n = 2 + static_cast<int>(seedv % 5);
        spec.ell = 1 + static_cast<int>(seedv % 3);
        spec.seed = seedv;
        Instance inst = gen::random_instance(spec);
        for (auto strat : {OrderStrategy::input_order(), OrderStrategy::longest_first(),
                           OrderStrategy::shortest_first(), OrderStrategy::random(seedv)}) {
            auto res = greedy_maximal_concat_detail(inst, strat);
            std::vector<int> used(inst.sigma(), 0);
            for (int i : res.chosen)
                for (Symbol s : inst.patterns[i].symbols) ++used[s];
            for (int s = 0; s < inst.sigma(); ++s)
                CHECK(used[s] + res.leftover[s] == inst.text.counts[s]);
            // maximality: no rejected pattern fits the final leftover budget
            for (int i = 0; i < inst.pattern_count(); ++i) {
                if (std::find(res.chosen.begin(), res.chosen.end(), i) != res.chosen.end())
                    continue;
                auto need = inst.patterns[i].count_vector(inst.sigma());
                bool fits = true;
                for (int s = 0; s < inst.sigma(); ++s)
                    if (need[s] > res.leftover[s]) fits = false;
                CHECK_FALSE(fits);
            }
        }
    }
}

TEST_CASE("alg1_bound arithmetic") {
    CHECK(alg1_bound(3, 1, false) == 15);
    CHECK(alg1_bound(2, 1, false) == 4);
    CHECK(alg1_bound(3, 1, true) == 9);
    CHECK_THROWS_AS(alg1_bound(0, 1, false), PreconditionViolated);
}

TEST_CASE("is_substring_free") {
    Instance ex = instance_from_json(
        R"({"alphabet":"abc","t":"aabbcc","patterns":["abb","bbc","cba","aca"],"kind":"substring"})");
    CHECK(is_substring_free(ex.patterns));
    Instance nested = instance_from_json(
        R"({"alphabet":"abc","t":"aabbcc","patterns":["ab","abc"],"kind":"substring"})");
    CHECK_FALSE(is_substring_free(nested.patterns));
    CHECK(is_substring_free({nested.patterns[0]}));
}

TEST_CASE("greedy ratio holds on random instances with known optimum") {
    int checked = 0;
    for (std::uint64_t seedv = 0; checked < 300; ++seedv) {
        gen::RandomSpec spec;
        spec.sigma = 2 + static_cast<int>(seedv % 3);
        spec.m = 4 + static_cast<int>(seedv % 7);
        spec.n = 2 + static_cast<int>(seedv % 5);
        spec.ell = 1 + static_cast<int>(seedv % 3);
        spec.seed = seedv;
        Instance inst = gen::random_instance(spec);
        if (inst.patterns.empty()) continue;
        auto exact = solve_exact(inst);
        REQUIRE(exact.proven_optimal);
        int ell = inst.max_pattern_length();
        // the bound degenerates to 0 at ell = 1, where greedy is exact
        long long denom = std::max(alg1_bound(ell, 1, false), 1LL);
        for (auto strat : {OrderStrategy::input_order(), OrderStrategy::longest_first(),
                           OrderStrategy::shortest_first(), OrderStrategy::random(seedv)}) {
            long long score = greedy_maximal_concat(inst, strat).score;
            CHECK(score * denom >= exact.report.score);
        }
        ++checked;
    }
}

TEST_CASE("rcsstr2 on worked set instances") {
    Instance chain = instance_from_json(
        R"({"alphabet":"abc","t":"abc","patterns":["ab","bc"],"kind":"substring"})");
    auto rep = solve_rcsstr2_set(chain, AtspSubroutine::ExactHeldKarp);
    CHECK(rep.score == 2);
    CHECK(chain.render(rep.arrangement) == "abc");

    Instance cyc = instance_from_json(
        R"({"alphabet":"abc","t":"abc","patterns":["ab","bc","ca"],"kind":"substring"})");
    CHECK(solve_rcsstr2_set(cyc, AtspSubroutine::ExactHeldKarp).score == 2);  // n-1, optimal

    Instance pair = instance_from_json(
        R"({"alphabet":"ab","t":"ab","patterns":["ab"],"kind":"substring"})");
    rep = solve_rcsstr2_set(pair, AtspSubroutine::ExactHeldKarp);
    CHECK(rep.score == 1);
    CHECK(pair.render(rep.arrangement) == "ab");
}

TEST_CASE("rcsstr2 rejects invalid inputs") {
    Instance rep_text = instance_from_json(
        R"({"alphabet":"ab","t":"aab","patterns":["ab"],"kind":"substring"})");
    CHECK_THROWS_AS(solve_rcsstr2_set(rep_text, AtspSubroutine::ExactHeldKarp),
                    PreconditionViolated);
    Instance long_pat = instance_from_json(
        R"({"alphabet":"abc","t":"abc","patterns":["abc"],"kind":"substring"})");
    CHECK_THROWS_AS(solve_rcsstr2_set(long_pat, AtspSubroutine::ExactHeldKarp),
                    PreconditionViolated);
}

TEST_CASE("exact-subroutine rcsstr2 equals the exact solver") {
    for (std::uint64_t seedv = 0; seedv < 60; ++seedv) {
        int sigma = 2 + static_cast<int>(seedv % 6);  // up to 7
        gen::RandomSpec spec;
        spec.sigma = sigma;
        spec.m = sigma;
        spec.text_is_set = true;
        spec.n = 1 + static_cast<int>(seedv % (sigma * (sigma - 1)));
        spec.ell = 2;
        spec.min_ell = 2;
        spec.seed = seedv;
        Instance inst = gen::random_instance(spec);
        if (inst.patterns.empty()) continue;
        auto approx = solve_rcsstr2_set(inst, AtspSubroutine::ExactHeldKarp);
        auto exact = solve_exact(inst);
        REQUIRE(exact.proven_optimal);
        CHECK(approx.score == exact.report.score);
    }
}

TEST_CASE("cycle break never loses weight when a 0-arc exists") {
    for (std::uint64_t seedv = 0; seedv < 60; ++seedv) {
        int sigma = 3 + static_cast<int>(seedv % 5);
        gen::RandomSpec spec;
        spec.sigma = sigma;
        spec.m = sigma;
        spec.text_is_set = true;
        spec.n = 1 + static_cast<int>(seedv % (2 * sigma));
        spec.ell = 2;
        spec.min_ell = 2;
        spec.seed = seedv + 1000;
        Instance inst = gen::random_instance(spec);
        if (inst.patterns.empty()) continue;
        int cycle_w = oracles::max_atsp_exact(pair_graph(inst)).weight;
        int expected = cycle_w == sigma ? sigma - 1 : cycle_w;
        CHECK(solve_rcsstr2_set(inst, AtspSubroutine::ExactHeldKarp).score == expected);
    }
}
