// Command-line front end: instance I/O, generators, solver dispatch,
// certificate verification, and the benchmark harness.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "rcs/approx_superstring.hpp"
#include "rcs/approx_supersequence.hpp"
#include "rcs/core.hpp"
#include "rcs/exact.hpp"
#include "rcs/gen.hpp"
#include "rcs/io.hpp"
#include "rcs/oracles.hpp"
#include "rcs/reductions.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::int64_t default_node_budget() {
    if (const char* env = std::getenv("RCS_NODE_BUDGET")) return std::atoll(env);
    return 10'000'000;
}

int validate_or_fail(const rcs::Instance& inst) {
    auto violations = rcs::validate_instance(inst);
    if (violations.empty()) return kExitOk;
    json arr = json::array();
    for (const auto& v : violations) arr.push_back(v.message);
    std::cout << arr.dump() << "\n";
    return kExitInvalid;
}

void dedup_patterns(rcs::Instance& inst) {
    std::vector<rcs::Pattern> unique;
    for (const auto& p : inst.patterns)
        if (std::find(unique.begin(), unique.end(), p) == unique.end()) unique.push_back(p);
    inst.patterns = std::move(unique);
}

rcs::approx_str::OrderStrategy order_strategy(const std::string& name, std::uint64_t seed) {
    using OS = rcs::approx_str::OrderStrategy;
    if (name == "input") return OS::input_order();
    if (name == "longest") return OS::longest_first();
    if (name == "shortest") return OS::shortest_first();
    if (name == "random") return OS::random(seed);
    throw CLI::ValidationError("--order", "unknown order strategy: " + name);
}

rcs::approx_seq::MasSubroutine mas_subroutine(const std::string& name, std::uint64_t seed,
                                              int p_prime_size) {
    using MS = rcs::approx_seq::MasSubroutine;
    if (name == "exact") return MS::exact_brute();
    if (name == "order-reverse") return MS::order_vs_reverse(seed);
    if (name == "local") return MS::local_search(seed, 1);
    if (name == "auto")
        return p_prime_size <= 9 ? MS::exact_brute() : MS::local_search(seed, 1);
    throw CLI::ValidationError("--mas", "unknown MAS subroutine: " + name);
}

rcs::approx_str::AtspSubroutine atsp_subroutine(const std::string& name, int sigma) {
    using AS = rcs::approx_str::AtspSubroutine;
    if (name == "exact") return AS::ExactHeldKarp;
    if (name == "greedy") return AS::GreedyEdge;
    if (name == "auto") return sigma <= 13 ? AS::ExactHeldKarp : AS::GreedyEdge;
    throw CLI::ValidationError("--sub", "unknown ATSP subroutine: " + name);
}

struct AlgOptions {
    std::string alg = "exact";
    std::string order = "input";
    std::string sub = "auto";
    std::string mas = "auto";
    int samples = 1;
    std::uint64_t seed = 0;
    std::int64_t node_budget = default_node_budget();
    bool no_prune = false;
};

struct RunOutcome {
    rcs::SolutionReport report;
    bool budget_exhausted = false;
    std::optional<rcs::approx_seq::ScoreEstimate> estimate;
};

RunOutcome run_algorithm(const rcs::Instance& inst, const AlgOptions& opt) {
    RunOutcome out;
    if (opt.alg == "exact") {
        rcs::SearchConfig cfg;
        cfg.node_budget = opt.node_budget;
        cfg.pruning = opt.no_prune ? rcs::Pruning::None : rcs::Pruning::FeasibilityBound;
        auto res = rcs::solve_exact(inst, cfg);
        out.report = res.report;
        out.budget_exhausted = !res.proven_optimal;
    } else if (opt.alg == "greedy-concat") {
        out.report = rcs::approx_str::greedy_maximal_concat(
            inst, order_strategy(opt.order, opt.seed));
    } else if (opt.alg == "atsp2") {
        out.report =
            rcs::approx_str::solve_rcsstr2_set(inst, atsp_subroutine(opt.sub, inst.sigma()));
    } else if (opt.alg == "rcsseq2") {
        auto part = rcs::approx_seq::partition_pq(inst.text);
        out.report = rcs::approx_seq::solve_rcsseq2(
            inst, mas_subroutine(opt.mas, opt.seed, static_cast<int>(part.p_prime.size())));
    } else if (opt.alg == "random") {
        rcs::SolutionReport best;
        best.score = -1;
        for (int i = 0; i < opt.samples; ++i) {
            auto arr = rcs::approx_seq::random_arrangement(
                inst.text, rcs::approx_seq::derive_seed(opt.seed, i));
            auto rep = rcs::score_arrangement(inst, arr);
            if (rep.score > best.score) best = rep;
        }
        best.algorithm = "random";
        best.seed = opt.seed;
        out.report = best;
        if (opt.samples > 1)
            out.estimate =
                rcs::approx_seq::estimate_expected_score(inst, opt.samples, opt.seed);
    } else {
        throw CLI::ValidationError("--alg", "unknown algorithm: " + opt.alg);
    }
    return out;
}

int cmd_solve(const std::string& file, const AlgOptions& opt, bool dedup) {
    rcs::Instance inst = rcs::instance_from_json(slurp(file));
    if (dedup) dedup_patterns(inst);
    if (int rc = validate_or_fail(inst); rc != kExitOk) return rc;
    RunOutcome out = run_algorithm(inst, opt);
    json j = json::parse(rcs::report_to_json(inst, out.report));
    if (out.budget_exhausted) j["budget_exhausted"] = true;
    if (out.estimate) {
        j["mean"] = out.estimate->mean;
        j["std_error"] = out.estimate->std_error;
        j["samples"] = out.estimate->samples;
    }
    std::cout << j.dump() << "\n";
    return out.budget_exhausted ? kExitBudget : kExitOk;
}

int cmd_verify(const std::string& file, const std::string& arrangement) {
    rcs::Instance inst = rcs::instance_from_json(slurp(file));
    rcs::Arrangement arr;
    try {
        arr = inst.parse_symbols(arrangement);
        if (!rcs::is_arrangement_of(arr, inst.text))
            throw rcs::ArrangementMismatch("count vectors differ");
    } catch (const std::exception& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return kExitInvalid;
    }
    auto rep = rcs::score_arrangement(inst, arr);
    json j;
    j["score"] = rep.score;
    j["matched"] = rep.matched;
    json names = json::array();
    for (int i : rep.matched) names.push_back(inst.render(inst.patterns[i].symbols));
    j["matched_patterns"] = names;
    std::cout << j.dump() << "\n";
    return kExitOk;
}

rcs::Instance generate(const std::string& family, const rcs::gen::RandomSpec& rspec,
                       const std::string& graph_file) {
    if (family == "tight") return rcs::gen::tight_example();
    if (family == "random") return rcs::gen::random_instance(rspec);
    if (graph_file.empty())
        throw CLI::ValidationError("--graph", "family '" + family + "' needs --graph");
    std::string text = slurp(graph_file);
    if (family == "clique") return rcs::reductions::clique_to_rcsstr(
        rcs::undirected_from_json(text));
    if (family == "atsp")
        return rcs::reductions::atsp01_to_rcsstr2(rcs::digraph_from_json(text));
    if (family == "mas")
        return rcs::reductions::digraph_to_rcsseq2(rcs::digraph_from_json(text));
    throw CLI::ValidationError("--family", "unknown family: " + family);
}

int cmd_scs(const std::string& input, bool binary_search, std::int64_t node_budget) {
    std::vector<rcs::Pattern> patterns;
    std::istringstream in(slurp(input));
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<rcs::Symbol> syms;
        for (char c : line) {
            if (c != '0' && c != '1') {
                std::cout << json{{"error", "patterns must be over {0,1}"}}.dump() << "\n";
                return kExitInvalid;
            }
            syms.push_back(c - '0');
        }
        patterns.emplace_back(std::move(syms));
    }
    rcs::SearchConfig cfg;
    cfg.node_budget = node_budget;
    auto res = rcs::reductions::binary_scs_driver(patterns, cfg, binary_search);
    std::string s;
    for (rcs::Symbol sym : res.superstring) s.push_back(static_cast<char>('0' + sym));
    json j;
    j["superstring"] = s;
    j["length"] = res.length;
    j["solver_calls"] = res.solver_calls;
    std::cout << j.dump() << "\n";
    return kExitOk;
}

std::string csv_num(double v) {
    std::ostringstream ss;
    ss << v;
    return ss.str();
}

int cmd_bench(const std::string& family, const rcs::gen::RandomSpec& base_spec, int count,
              const std::vector<std::string>& algs, bool with_exact,
              std::int64_t node_budget, std::uint64_t seed, const std::string& out_path) {
    struct Row {
        std::string instance_id, family, kind, algorithm, score, exact_score, ratio,
            elapsed_ms, seed;
        int n = 0, m = 0, ell = 0;
    };
    std::vector<Row> rows;
    std::map<std::string, std::vector<double>> ratios_by_alg;

    for (int i = 0; i < count; ++i) {
        rcs::gen::RandomSpec spec = base_spec;
        spec.seed = rcs::approx_seq::derive_seed(seed, i);
        rcs::Instance inst = generate(family, spec, "");
        std::optional<int> exact_score;
        if (with_exact) {
            rcs::SearchConfig cfg;
            cfg.node_budget = node_budget;
            auto res = rcs::solve_exact(inst, cfg);
            if (res.proven_optimal) exact_score = res.report.score;
        }
        char id[16];
        std::snprintf(id, sizeof id, "i%05d", i);
        for (const std::string& alg_spec : algs) {
            AlgOptions opt;
            opt.node_budget = node_budget;
            opt.seed = spec.seed;
            // "name" or "name:variant", e.g. greedy-concat:longest
            auto colon = alg_spec.find(':');
            opt.alg = alg_spec.substr(0, colon == std::string::npos ? alg_spec.size() : colon);
            if (colon != std::string::npos) {
                std::string variant = alg_spec.substr(colon + 1);
                if (opt.alg == "greedy-concat") opt.order = variant;
                if (opt.alg == "atsp2") opt.sub = variant;
                if (opt.alg == "rcsseq2") opt.mas = variant;
                if (opt.alg == "random") opt.samples = std::atoi(variant.c_str());
            }
            RunOutcome out = run_algorithm(inst, opt);
            Row row;
            row.instance_id = id;
            row.family = family;
            row.kind = rcs::kind_name(inst.kind);
            row.n = inst.pattern_count();
            row.m = inst.text.total();
            row.ell = inst.max_pattern_length();
            row.algorithm = alg_spec;
            row.score = std::to_string(out.report.score);
            row.seed = std::to_string(spec.seed);
            row.elapsed_ms = csv_num(out.report.elapsed_ms);
            if (exact_score) {
                row.exact_score = std::to_string(*exact_score);
                if (*exact_score > 0) {
                    double r = static_cast<double>(out.report.score) / *exact_score;
                    row.ratio = csv_num(r);
                    ratios_by_alg[alg_spec].push_back(r);
                }
            }
            rows.push_back(std::move(row));
        }
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return std::tie(a.instance_id, a.algorithm) < std::tie(b.instance_id, b.algorithm);
    });

    std::ostringstream csv;
    csv << "instance_id,family,kind,n,m,ell,algorithm,score,exact_score,ratio,elapsed_ms,seed\n";
    for (const Row& r : rows)
        csv << r.instance_id << ',' << r.family << ',' << r.kind << ',' << r.n << ',' << r.m
            << ',' << r.ell << ',' << r.algorithm << ',' << r.score << ',' << r.exact_score
            << ',' << r.ratio << ',' << r.elapsed_ms << ',' << r.seed << "\n";
    for (const auto& [alg, rs] : ratios_by_alg) {
        double mn = *std::min_element(rs.begin(), rs.end());
        double mean = 0;
        for (double r : rs) mean += r;
        mean /= static_cast<double>(rs.size());
        csv << "summary:min,,,,,," << alg << ",,," << csv_num(mn) << ",,\n";
        csv << "summary:mean,,,,,," << alg << ",,," << csv_num(mean) << ",,\n";
    }

    if (out_path.empty() || out_path == "-") {
        std::cout << csv.str();
    } else {
        std::ofstream out(out_path);
        out << csv.str();
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Restricted common superstring / supersequence toolkit"};
    app.require_subcommand(1);

    std::string file, arrangement, family = "random", graph_file, input, out_path;
    bool dedup = false, no_prune = false, binary_search = false, with_exact = false;
    AlgOptions opt;
    rcs::gen::RandomSpec rspec;
    std::string kind = "substring";
    int count = 10;
    std::vector<std::string> algs{"exact"};
    std::uint64_t bench_seed = 0;

    auto* validate = app.add_subcommand("validate", "check an instance file");
    validate->add_option("file", file)->required();

    auto* solve = app.add_subcommand("solve", "solve an instance");
    solve->add_option("file", file)->required();
    solve->add_option("--alg", opt.alg, "exact|greedy-concat|atsp2|rcsseq2|random");
    solve->add_option("--order", opt.order, "input|longest|shortest|random");
    solve->add_option("--sub", opt.sub, "exact|greedy|auto");
    solve->add_option("--mas", opt.mas, "exact|order-reverse|local|auto");
    solve->add_option("--samples", opt.samples);
    solve->add_option("--seed", opt.seed);
    solve->add_option("--node-budget", opt.node_budget);
    solve->add_flag("--no-prune", no_prune);
    solve->add_flag("--dedup", dedup, "drop duplicate patterns before validating");

    auto* verify = app.add_subcommand("verify", "score an arrangement certificate");
    verify->add_option("file", file)->required();
    verify->add_option("--arrangement", arrangement)->required();

    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("--family", family, "tight|random|clique|atsp|mas");
    gen->add_option("--graph", graph_file);
    gen->add_option("--sigma", rspec.sigma);
    gen->add_option("--m", rspec.m);
    gen->add_option("--n", rspec.n);
    gen->add_option("--ell", rspec.ell);
    gen->add_option("--min-ell", rspec.min_ell);
    gen->add_flag("--set", rspec.text_is_set);
    gen->add_option("--kind", kind, "substring|subsequence");
    gen->add_option("--seed", rspec.seed);

    auto* scs = app.add_subcommand("scs", "binary shortest common superstring driver");
    scs->add_option("--input", input, "file with one 0/1 pattern per line")->required();
    scs->add_flag("--binary-search", binary_search);
    scs->add_option("--node-budget", opt.node_budget);

    auto* bench = app.add_subcommand("bench", "ratio benchmark over generated instances");
    bench->add_option("--family", family, "random");
    bench->add_option("--count", count);
    bench->add_option("--algs", algs)->delimiter(',');
    bench->add_flag("--exact", with_exact, "compute exact scores and ratios");
    bench->add_option("--sigma", rspec.sigma);
    bench->add_option("--m", rspec.m);
    bench->add_option("--n", rspec.n);
    bench->add_option("--ell", rspec.ell);
    bench->add_option("--min-ell", rspec.min_ell);
    bench->add_flag("--set", rspec.text_is_set);
    bench->add_option("--kind", kind, "substring|subsequence");
    bench->add_option("--seed", bench_seed);
    bench->add_option("--node-budget", opt.node_budget);
    bench->add_option("--out", out_path, "CSV path, '-' for stdout");

    CLI11_PARSE(app, argc, argv);
    opt.no_prune = no_prune;

    try {
        rspec.kind = rcs::kind_from_name(kind);
        if (validate->parsed()) {
            rcs::Instance inst = rcs::instance_from_json(slurp(file));
            int rc = validate_or_fail(inst);
            if (rc == kExitOk) std::cout << "[]\n";
            return rc;
        }
        if (solve->parsed()) return cmd_solve(file, opt, dedup);
        if (verify->parsed()) return cmd_verify(file, arrangement);
        if (gen->parsed()) {
            std::cout << rcs::instance_to_json(generate(family, rspec, graph_file)) << "\n";
            return kExitOk;
        }
        if (scs->parsed()) return cmd_scs(input, binary_search, opt.node_budget);
        if (bench->parsed())
            return cmd_bench(family, rspec, count, algs, with_exact, opt.node_budget,
                             bench_seed, out_path);
    } catch (const rcs::reductions::BudgetExhausted& e) {
        std::cerr << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitOk;
}
