#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rcs/approx_superstring.hpp"
#include "rcs/approx_supersequence.hpp"
#include "rcs/core.hpp"
#include "rcs/exact.hpp"
#include "rcs/gen.hpp"
#include "rcs/io.hpp"
#include "rcs/oracles.hpp"
#include "rcs/reductions.hpp"

namespace py = pybind11;
using namespace rcs;

namespace {

py::dict report_dict(const Instance& inst, const SolutionReport& rep) {
    py::dict d;
    d["score"] = rep.score;
    d["matched"] = rep.matched;
    d["arrangement"] = inst.render(rep.arrangement);
    d["algorithm"] = rep.algorithm;
    d["elapsed_ms"] = rep.elapsed_ms;
    return d;
}

UndirectedGraph make_undirected(int n, const std::vector<std::pair<int, int>>& edges) {
    return UndirectedGraph(n, edges);
}

Digraph make_digraph(int n, const std::vector<std::pair<int, int>>& arcs,
                     const std::optional<std::vector<int>>& weights) {
    std::vector<Arc> as;
    for (auto [u, v] : arcs) as.push_back({u, v});
    return Digraph(n, std::move(as), weights);
}

std::vector<Pattern> parse_patterns(const Instance& inst,
                                    const std::vector<std::string>& strings) {
    std::vector<Pattern> out;
    for (const auto& s : strings) out.emplace_back(inst.parse_symbols(s));
    return out;
}

}  // namespace

PYBIND11_MODULE(_rcsolve, m) {
    m.doc() = "Restricted common superstring / supersequence toolkit";

    py::class_<Instance>(m, "Instance")
        .def_static("from_json", &instance_from_json)
        .def("to_json", &instance_to_json)
        .def_property_readonly("alphabet", [](const Instance& i) { return i.labels; })
        .def_property_readonly("kind", [](const Instance& i) { return kind_name(i.kind); })
        .def_property_readonly("pattern_count", &Instance::pattern_count)
        .def_property_readonly("text_length", [](const Instance& i) { return i.text.total(); })
        .def("patterns",
             [](const Instance& i) {
                 std::vector<std::string> out;
                 for (const auto& p : i.patterns) out.push_back(i.render(p.symbols));
                 return out;
             })
        .def("__repr__", [](const Instance& i) {
            return "<Instance kind=" + kind_name(i.kind) +
                   " m=" + std::to_string(i.text.total()) +
                   " n=" + std::to_string(i.pattern_count()) + ">";
        });

    m.def("validate", [](const Instance& inst) {
        std::vector<std::string> out;
        for (const auto& v : validate_instance(inst)) out.push_back(v.message);
        return out;
    });

    m.def("score", [](const Instance& inst, const std::string& arrangement) {
        return report_dict(inst, score_arrangement(inst, inst.parse_symbols(arrangement)));
    });

    m.def(
        "solve_exact",
        [](const Instance& inst, std::int64_t node_budget, bool prune) {
            SearchConfig cfg;
            cfg.node_budget = node_budget;
            cfg.pruning = prune ? Pruning::FeasibilityBound : Pruning::None;
            auto res = solve_exact(inst, cfg);
            py::dict d = report_dict(inst, res.report);
            d["proven_optimal"] = res.proven_optimal;
            d["nodes_expanded"] = res.nodes_expanded;
            return d;
        },
        py::arg("instance"), py::arg("node_budget") = 10'000'000, py::arg("prune") = true);

    m.def(
        "greedy_concat",
        [](const Instance& inst, const std::string& order, std::uint64_t seed) {
            using OS = approx_str::OrderStrategy;
            OS strat = order == "longest"    ? OS::longest_first()
                       : order == "shortest" ? OS::shortest_first()
                       : order == "random"   ? OS::random(seed)
                                             : OS::input_order();
            return report_dict(inst, approx_str::greedy_maximal_concat(inst, strat));
        },
        py::arg("instance"), py::arg("order") = "input", py::arg("seed") = 0);

    m.def(
        "solve_rcsstr2_set",
        [](const Instance& inst, const std::string& sub) {
            auto s = sub == "greedy" ? approx_str::AtspSubroutine::GreedyEdge
                                     : approx_str::AtspSubroutine::ExactHeldKarp;
            return report_dict(inst, approx_str::solve_rcsstr2_set(inst, s));
        },
        py::arg("instance"), py::arg("sub") = "exact");

    m.def(
        "solve_rcsseq2",
        [](const Instance& inst, const std::string& mas, std::uint64_t seed) {
            using MS = approx_seq::MasSubroutine;
            MS s = mas == "order-reverse" ? MS::order_vs_reverse(seed)
                   : mas == "local"       ? MS::local_search(seed, 1)
                                          : MS::exact_brute();
            return report_dict(inst, approx_seq::solve_rcsseq2(inst, s));
        },
        py::arg("instance"), py::arg("mas") = "exact", py::arg("seed") = 0);

    m.def(
        "random_arrangement",
        [](const Instance& inst, std::uint64_t seed) {
            return inst.render(approx_seq::random_arrangement(inst.text, seed));
        },
        py::arg("instance"), py::arg("seed") = 0);

    m.def(
        "estimate_expected_score",
        [](const Instance& inst, int samples, std::uint64_t seed) {
            auto est = approx_seq::estimate_expected_score(inst, samples, seed);
            py::dict d;
            d["mean"] = est.mean;
            d["std_error"] = est.std_error;
            d["samples"] = est.samples;
            return d;
        },
        py::arg("instance"), py::arg("samples") = 1000, py::arg("seed") = 0);

    m.def("alg1_bound", &approx_str::alg1_bound, py::arg("ell"), py::arg("q"),
          py::arg("substring_free") = false);

    m.def("tight_example", &gen::tight_example);

    m.def(
        "random_instance",
        [](int sigma, int m, int n, int ell, int min_ell, bool text_is_set,
           const std::string& kind, std::uint64_t seed) {
            gen::RandomSpec spec{sigma, m,        n,
                                 ell,   min_ell,  text_is_set,
                                 kind_from_name(kind), seed};
            return gen::random_instance(spec);
        },
        py::arg("sigma") = 3, py::arg("m") = 8, py::arg("n") = 5, py::arg("ell") = 2,
        py::arg("min_ell") = 1, py::arg("text_is_set") = false,
        py::arg("kind") = "substring", py::arg("seed") = 0);

    m.def(
        "clique_to_rcsstr",
        [](int n, const std::vector<std::pair<int, int>>& edges) {
            return reductions::clique_to_rcsstr(make_undirected(n, edges));
        },
        py::arg("n"), py::arg("edges"));

    m.def(
        "digraph_to_rcsseq2",
        [](int n, const std::vector<std::pair<int, int>>& arcs) {
            return reductions::digraph_to_rcsseq2(make_digraph(n, arcs, std::nullopt));
        },
        py::arg("n"), py::arg("arcs"));

    m.def(
        "atsp01_to_rcsstr2",
        [](int n, const std::vector<std::pair<int, int>>& arcs,
           const std::vector<int>& weights) {
            return reductions::atsp01_to_rcsstr2(make_digraph(n, arcs, weights));
        },
        py::arg("n"), py::arg("arcs"), py::arg("weights"));

    m.def(
        "max_clique",
        [](int n, const std::vector<std::pair<int, int>>& edges) {
            return oracles::max_clique_exact(make_undirected(n, edges));
        },
        py::arg("n"), py::arg("edges"));

    m.def(
        "max_acyclic_subgraph",
        [](int n, const std::vector<std::pair<int, int>>& arcs) {
            auto res = oracles::max_acyclic_subgraph_exact(make_digraph(n, arcs, std::nullopt));
            std::vector<std::pair<int, int>> kept;
            for (const Arc& a : res.kept) kept.emplace_back(a.from, a.to);
            py::dict d;
            d["order"] = res.order;
            d["kept"] = kept;
            return d;
        },
        py::arg("n"), py::arg("arcs"));

    m.def(
        "binary_scs",
        [](const std::vector<std::string>& patterns, bool binary_search) {
            Instance probe;
            probe.labels = "01";
            probe.text.counts = {1, 1};
            auto pats = parse_patterns(probe, patterns);
            auto res = reductions::binary_scs_driver(pats, SearchConfig{}, binary_search);
            std::string s;
            for (Symbol sym : res.superstring) s.push_back(static_cast<char>('0' + sym));
            py::dict d;
            d["superstring"] = s;
            d["length"] = res.length;
            d["solver_calls"] = res.solver_calls;
            return d;
        },
        py::arg("patterns"), py::arg("binary_search") = false);
}
