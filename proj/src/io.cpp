#include "rcs/io.hpp"

#include <json.hpp>

namespace rcs {

using nlohmann::json;

std::string instance_to_json(const Instance& instance) {
    json j;
    j["alphabet"] = instance.labels;
    j["t"] = instance.render(instance.text.expand());
    json pats = json::array();
    for (const auto& p : instance.patterns) pats.push_back(instance.render(p.symbols));
    j["patterns"] = pats;
    j["kind"] = kind_name(instance.kind);
    return j.dump();
}

Instance instance_from_json(const std::string& text) {
    json j = json::parse(text);
    Instance inst;
    inst.labels = j.at("alphabet").get<std::string>();
    for (std::size_t i = 0; i < inst.labels.size(); ++i)
        if (inst.labels.find(inst.labels[i], i + 1) != std::string::npos)
            throw PreconditionViolated("alphabet labels must be distinct");
    inst.text.counts.assign(inst.labels.size(), 0);
    for (char c : j.at("t").get<std::string>()) {
        auto pos = inst.labels.find(c);
        if (pos == std::string::npos)
            throw PreconditionViolated(std::string("text character not in alphabet: ") + c);
        ++inst.text.counts[pos];
    }
    if (inst.text.total() < 1) throw PreconditionViolated("text must be non-empty");
    for (const auto& ps : j.at("patterns")) {
        inst.patterns.emplace_back(inst.parse_symbols(ps.get<std::string>()));
    }
    inst.kind = kind_from_name(j.at("kind").get<std::string>());
    return inst;
}

std::string report_to_json(const Instance& instance, const SolutionReport& report) {
    json j;
    j["algorithm"] = report.algorithm;
    j["score"] = report.score;
    j["matched"] = report.matched;
    json names = json::array();
    for (int i : report.matched) names.push_back(instance.render(instance.patterns[i].symbols));
    j["matched_patterns"] = names;
    j["arrangement"] = instance.render(report.arrangement);
    j["elapsed_ms"] = report.elapsed_ms;
    if (report.seed) j["seed"] = *report.seed;
    return j.dump();
}

std::string digraph_to_json(const Digraph& g) {
    json j;
    j["n"] = g.n;
    json edges = json::array();
    for (const Arc& a : g.arcs) edges.push_back({a.from, a.to});
    j["edges"] = edges;
    j["directed"] = true;
    if (g.weights) j["weights"] = *g.weights;
    return j.dump();
}

Digraph digraph_from_json(const std::string& text) {
    json j = json::parse(text);
    int n = j.at("n").get<int>();
    std::vector<Arc> arcs;
    for (const auto& e : j.at("edges")) arcs.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    std::optional<std::vector<int>> weights;
    if (j.contains("weights")) weights = j["weights"].get<std::vector<int>>();
    return Digraph(n, std::move(arcs), std::move(weights));
}

std::string undirected_to_json(const UndirectedGraph& g) {
    json j;
    j["n"] = g.n;
    json edges = json::array();
    for (auto [u, v] : g.edges) edges.push_back({u, v});
    j["edges"] = edges;
    j["directed"] = false;
    return j.dump();
}

UndirectedGraph undirected_from_json(const std::string& text) {
    json j = json::parse(text);
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return UndirectedGraph(n, std::move(edges));
}

bool json_is_directed(const std::string& text) {
    json j = json::parse(text);
    return j.value("directed", false);
}

}  // namespace rcs
