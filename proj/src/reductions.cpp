#include "rcs/reductions.hpp"

#include <algorithm>
#include <set>

namespace rcs::reductions {

namespace {
constexpr const char* kCharset =
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
}

std::string default_labels(int n) {
    if (n > 62) throw SizeLimit("label charset supports at most 62 symbols");
    return std::string(kCharset, kCharset + n);
}

Instance clique_to_rcsstr(const UndirectedGraph& g) {
    if (g.n < 1) throw PreconditionViolated("graph must have at least one vertex");
    Instance inst;
    inst.labels = default_labels(g.n);
    inst.text.counts.assign(g.n, g.n);
    inst.kind = Kind::Substring;
    for (int i = 0; i < g.n; ++i) {
        std::vector<Symbol> sym(g.n, i);
        for (int j = 0; j < g.n; ++j)
            if (j != i && !g.adjacent(i, j)) sym.push_back(j);
        inst.patterns.emplace_back(std::move(sym));
    }
    return inst;
}

Arrangement clique_to_arrangement(const UndirectedGraph& g, const std::vector<int>& clique) {
    std::set<int> members(clique.begin(), clique.end());
    if (members.size() != clique.size()) throw NotAClique("repeated vertex in clique");
    for (int v : members)
        if (v < 0 || v >= g.n) throw NotAClique("vertex out of range");
    for (int u : members)
        for (int v : members)
            if (u < v && !g.adjacent(u, v)) throw NotAClique("vertices not pairwise adjacent");

    Instance inst = clique_to_rcsstr(g);
    Arrangement arr;
    std::vector<int> used(g.n, 0);
    for (int v : members) {
        for (Symbol s : inst.patterns[v].symbols) {
            arr.push_back(s);
            ++used[s];
        }
    }
    for (int s = 0; s < g.n; ++s)
        for (int k = used[s]; k < g.n; ++k) arr.push_back(s);
    return arr;
}

std::vector<int> arrangement_to_clique(const UndirectedGraph& g,
                                       const Arrangement& arrangement) {
    Instance inst = clique_to_rcsstr(g);
    SolutionReport rep = score_arrangement(inst, arrangement);
    for (int u : rep.matched)
        for (int v : rep.matched)
            if (u < v && !g.adjacent(u, v))
                throw InternalInvariantViolation(
                    "matched vertices are not a clique; reduction falsified");
    return rep.matched;
}

Instance atsp01_to_rcsstr2(const Digraph& g) {
    if (!g.is_complete())
        throw PreconditionViolated("atsp01_to_rcsstr2 requires a complete digraph");
    if (!g.weights) throw PreconditionViolated("atsp01_to_rcsstr2 requires 0/1 weights");
    Instance inst;
    inst.labels = default_labels(g.n);
    inst.text.counts.assign(g.n, 1);
    inst.kind = Kind::Substring;
    for (std::size_t i = 0; i < g.arcs.size(); ++i)
        if ((*g.weights)[i] == 1)
            inst.patterns.emplace_back(std::vector<Symbol>{g.arcs[i].from, g.arcs[i].to});
    return inst;
}

Instance digraph_to_rcsseq2(const Digraph& g) {
    Instance inst;
    inst.labels = default_labels(g.n);
    inst.text.counts.assign(g.n, 1);
    inst.kind = Kind::Subsequence;
    auto arcs = g.arcs;
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    for (const Arc& a : arcs)
        inst.patterns.emplace_back(std::vector<Symbol>{a.from, a.to});
    return inst;
}

bool is_complete(const Instance& instance, const SearchConfig& config) {
    ExactResult res = solve_exact(instance, config);
    if (!res.proven_optimal)
        throw BudgetExhausted("exact solver exhausted its budget in is_complete");
    return res.report.score == instance.pattern_count();
}

namespace {

struct BinaryBounds {
    int i_min = 0, j_min = 0, max_len = 0, total_len = 0;
};

BinaryBounds pattern_bounds(const std::vector<Pattern>& patterns) {
    BinaryBounds b;
    std::set<std::vector<Symbol>> seen;
    for (const auto& p : patterns) {
        if (!seen.insert(p.symbols).second)
            throw PreconditionViolated("patterns must be distinct");
        int zeros = 0, ones = 0;
        for (Symbol s : p.symbols) {
            if (s == 0)
                ++zeros;
            else if (s == 1)
                ++ones;
            else
                throw PreconditionViolated("binary_scs_driver requires symbols 0/1");
        }
        b.i_min = std::max(b.i_min, zeros);
        b.j_min = std::max(b.j_min, ones);
        b.max_len = std::max(b.max_len, p.length());
        b.total_len += p.length();
    }
    return b;
}

Instance binary_instance(const std::vector<Pattern>& patterns, int zeros, int ones) {
    Instance inst;
    inst.labels = "01";
    inst.text.counts = {zeros, ones};
    inst.patterns = patterns;
    inst.kind = Kind::Substring;
    return inst;
}

}  // namespace

ScsDriverResult binary_scs_driver(const std::vector<Pattern>& patterns,
                                  const SearchConfig& config, bool binary_search) {
    if (patterns.empty()) return {{}, 0, 0};
    BinaryBounds b = pattern_bounds(patterns);

    ScsDriverResult result;
    // first complete instance at total length L, scanning i ascending
    auto probe = [&](int total) -> std::optional<Arrangement> {
        for (int i = b.i_min; i + b.j_min <= total; ++i) {
            int j = total - i;
            ExactResult res = solve_exact(binary_instance(patterns, i, j), config);
            ++result.solver_calls;
            if (!res.proven_optimal)
                throw BudgetExhausted("exact solver exhausted its budget in the driver");
            if (res.report.score == static_cast<int>(patterns.size()))
                return res.report.arrangement;
        }
        return std::nullopt;
    };

    int lo = std::max(b.i_min + b.j_min, b.max_len);
    int hi = b.total_len;  // concatenation always works
    std::optional<Arrangement> found;
    if (binary_search) {
        // completeness at some (i,j) with i+j=L is monotone in L: padding a
        // complete multiset with one more symbol keeps it complete
        while (lo < hi) {
            int mid = lo + (hi - lo) / 2;
            if (probe(mid))
                hi = mid;
            else
                lo = mid + 1;
        }
        found = probe(lo);
    } else {
        for (int total = lo; total <= hi && !found; ++total) found = probe(total);
    }
    if (!found) throw InternalInvariantViolation("concatenation bound violated");
    result.superstring = *found;
    result.length = static_cast<int>(found->size());
    return result;
}

}  // namespace rcs::reductions
