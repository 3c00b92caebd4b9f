#include "rcs/exact.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_map>

namespace rcs {

namespace {

using Clock = std::chrono::steady_clock;

// Per-pattern progress automaton. For substrings this is the KMP prefix
// automaton; for subsequences the greedy pointer. State == length means
// matched and is absorbing.
struct PatternTracker {
    int sigma = 0;
    Kind kind = Kind::Substring;
    std::vector<int> lengths;
    // substring: delta[p][state * sigma + s]
    std::vector<std::vector<int>> delta;
    std::vector<const Pattern*> patterns;
    // demand[p][state]: count vector of pattern[state..]
    std::vector<std::vector<std::vector<int>>> demand;

    PatternTracker(const Instance& inst) : sigma(inst.sigma()), kind(inst.kind) {
        for (const auto& p : inst.patterns) {
            patterns.push_back(&p);
            int len = p.length();
            lengths.push_back(len);
            if (kind == Kind::Substring) {
                std::vector<int> d(static_cast<std::size_t>(len + 1) * sigma, 0);
                // prefix function
                std::vector<int> pi(len, 0);
                for (int i = 1; i < len; ++i) {
                    int k = pi[i - 1];
                    while (k > 0 && p.symbols[i] != p.symbols[k]) k = pi[k - 1];
                    if (p.symbols[i] == p.symbols[k]) ++k;
                    pi[i] = k;
                }
                for (int st = 0; st <= len; ++st) {
                    for (int s = 0; s < sigma; ++s) {
                        int nxt;
                        if (st == len) {
                            nxt = len;  // absorbing once matched
                        } else if (p.symbols[st] == s) {
                            nxt = st + 1;
                        } else if (st == 0) {
                            nxt = 0;
                        } else {
                            nxt = d[static_cast<std::size_t>(pi[st - 1]) * sigma + s];
                        }
                        d[static_cast<std::size_t>(st) * sigma + s] = nxt;
                    }
                }
                delta.push_back(std::move(d));
            } else {
                delta.emplace_back();
            }
            std::vector<std::vector<int>> dem(len + 1, std::vector<int>(sigma, 0));
            for (int st = len - 1; st >= 0; --st) {
                dem[st] = dem[st + 1];
                ++dem[st][p.symbols[st]];
            }
            demand.push_back(std::move(dem));
        }
    }

    int count() const { return static_cast<int>(lengths.size()); }

    int advance(int p, int state, Symbol s) const {
        if (state == lengths[p]) return state;
        if (kind == Kind::Substring)
            return delta[p][static_cast<std::size_t>(state) * sigma + s];
        return p >= 0 && patterns[p]->symbols[state] == s ? state + 1 : state;
    }

    bool feasible(int p, int state, const std::vector<int>& remaining) const {
        const auto& need = demand[p][state];
        for (int s = 0; s < sigma; ++s)
            if (need[s] > remaining[s]) return false;
        return true;
    }
};

struct BudgetExhausted {};

struct Searcher {
    const Instance& inst;
    const SearchConfig& cfg;
    PatternTracker tracker;
    int sigma;
    int np;

    std::int64_t nodes = 0;
    std::int64_t leaves = 0;
    bool counting = true;
    std::optional<Clock::time_point> deadline;

    // incumbent, updated at every leaf reached by the search
    int best_score = -1;
    Arrangement best_arr;
    Arrangement path;
    int path_score = 0;

    std::unordered_map<std::string, int> memo;

    Searcher(const Instance& i, const SearchConfig& c) : inst(i), cfg(c), tracker(i) {
        sigma = inst.sigma();
        np = tracker.count();
        if (cfg.time_budget_ms)
            deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double, std::milli>(
                                              *cfg.time_budget_ms));
    }

    void tick() {
        if (!counting) return;
        if (++nodes > cfg.node_budget) throw BudgetExhausted{};
        if (deadline && (nodes & 0x3ff) == 0 && Clock::now() > *deadline)
            throw BudgetExhausted{};
    }

    void record_leaf() {
        ++leaves;
        if (path_score > best_score) {
            best_score = path_score;
            best_arr = path;
        }
    }

    // full enumeration, one leaf per distinct arrangement
    void enumerate(std::vector<int>& rem, std::vector<int>& states, int total_left) {
        tick();
        if (total_left == 0) {
            record_leaf();
            return;
        }
        for (int s = 0; s < sigma; ++s) {
            if (rem[s] == 0) continue;
            std::vector<int> next_states(np);
            int gain = 0;
            for (int p = 0; p < np; ++p) {
                next_states[p] = tracker.advance(p, states[p], s);
                if (next_states[p] == tracker.lengths[p] && states[p] != tracker.lengths[p])
                    ++gain;
            }
            --rem[s];
            path.push_back(s);
            path_score += gain;
            enumerate(rem, next_states, total_left - 1);
            path_score -= gain;
            path.pop_back();
            ++rem[s];
        }
    }

    static std::string key_of(const std::vector<int>& rem, const std::vector<int>& states) {
        std::string k;
        k.reserve(rem.size() + states.size());
        for (int c : rem) k.push_back(static_cast<char>(c));
        for (int st : states) k.push_back(static_cast<char>(st));
        return k;
    }

    // exact additional score achievable from (rem, states); memoized, with
    // an early stop once the admissible bound is attained
    int dp(std::vector<int>& rem, const std::vector<int>& states, int total_left) {
        if (total_left == 0) {
            record_leaf();
            return 0;
        }
        std::string key = key_of(rem, states);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        tick();
        int ub = 0;
        for (int p = 0; p < np; ++p)
            if (states[p] != tracker.lengths[p] && tracker.feasible(p, states[p], rem)) ++ub;
        int best = 0;
        bool first = true;
        for (int s = 0; s < sigma; ++s) {
            if (rem[s] == 0) continue;
            std::vector<int> next_states(np);
            int gain = 0;
            for (int p = 0; p < np; ++p) {
                next_states[p] = tracker.advance(p, states[p], s);
                if (next_states[p] == tracker.lengths[p] && states[p] != tracker.lengths[p])
                    ++gain;
            }
            --rem[s];
            path.push_back(s);
            path_score += gain;
            int val = gain + dp(rem, next_states, total_left - 1);
            path_score -= gain;
            path.pop_back();
            ++rem[s];
            if (first || val > best) best = val;
            first = false;
            if (best >= ub) break;
        }
        memo.emplace(std::move(key), best);
        return best;
    }
};

}  // namespace

int upper_bound(const std::vector<Symbol>& prefix, const Instance& instance) {
    PatternTracker tracker(instance);
    std::vector<int> rem = instance.text.counts;
    std::vector<int> states(tracker.count(), 0);
    for (Symbol s : prefix) {
        if (s < 0 || s >= instance.sigma() || rem[s] == 0)
            throw PreconditionViolated("prefix inconsistent with instance text");
        --rem[s];
        for (int p = 0; p < tracker.count(); ++p) states[p] = tracker.advance(p, states[p], s);
    }
    int b = 0;
    for (int p = 0; p < tracker.count(); ++p) {
        if (states[p] == tracker.lengths[p])
            ++b;
        else if (tracker.feasible(p, states[p], rem))
            ++b;
    }
    return b;
}

ExactResult solve_exact(const Instance& instance, const SearchConfig& config) {
    if (config.node_budget < 1) throw PreconditionViolated("node_budget must be >= 1");
    auto t0 = Clock::now();
    Searcher searcher(instance, config);
    std::vector<int> rem = instance.text.counts;
    std::vector<int> states(searcher.np, 0);
    int total = instance.text.total();

    ExactResult res;
    bool exhausted = false;
    int optimum = -1;
    try {
        if (config.pruning == Pruning::None) {
            searcher.enumerate(rem, states, total);
            optimum = searcher.best_score;
        } else {
            optimum = searcher.dp(rem, states, total);
        }
    } catch (const BudgetExhausted&) {
        exhausted = true;
    }

    res.nodes_expanded = searcher.nodes;
    res.leaves_visited = searcher.leaves;
    res.proven_optimal = !exhausted;

    Arrangement arr;
    if (exhausted) {
        if (searcher.best_score < 0) {
            // no leaf reached; fall back to the ascending-order arrangement
            arr = instance.text.expand();
        } else {
            arr = searcher.best_arr;
        }
    } else if (config.pruning == Pruning::None) {
        arr = searcher.best_arr;  // first optimum in lexicographic DFS order
    } else {
        // lexicographically smallest optimal arrangement from the memo table
        searcher.counting = false;
        rem = instance.text.counts;
        std::vector<int> cur(searcher.np, 0);
        int target = optimum;
        int left = total;
        while (left > 0) {
            for (int s = 0; s < instance.sigma(); ++s) {
                if (rem[s] == 0) continue;
                std::vector<int> nxt(searcher.np);
                int gain = 0;
                for (int p = 0; p < searcher.np; ++p) {
                    nxt[p] = searcher.tracker.advance(p, cur[p], s);
                    if (nxt[p] == searcher.tracker.lengths[p] &&
                        cur[p] != searcher.tracker.lengths[p])
                        ++gain;
                }
                --rem[s];
                int rest = searcher.dp(rem, nxt, left - 1);
                if (gain + rest == target) {
                    arr.push_back(s);
                    cur = std::move(nxt);
                    target -= gain;
                    --left;
                    break;
                }
                ++rem[s];
            }
        }
    }

    res.report = score_arrangement(instance, arr);
    res.report.algorithm = "exact";
    res.report.elapsed_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return res;
}

}  // namespace rcs
