#include "rcs/core.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace rcs {

std::string kind_name(Kind k) {
    return k == Kind::Substring ? "substring" : "subsequence";
}

Kind kind_from_name(const std::string& name) {
    if (name == "substring") return Kind::Substring;
    if (name == "subsequence") return Kind::Subsequence;
    throw PreconditionViolated("unknown kind: " + name);
}

int MultisetText::total() const {
    return std::accumulate(counts.begin(), counts.end(), 0);
}

bool MultisetText::covers(const std::vector<int>& need) const {
    if (need.size() != counts.size()) return false;
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (need[i] > counts[i]) return false;
    return true;
}

std::vector<Symbol> MultisetText::expand() const {
    std::vector<Symbol> out;
    out.reserve(total());
    for (int s = 0; s < sigma(); ++s)
        for (int k = 0; k < counts[s]; ++k) out.push_back(s);
    return out;
}

std::vector<int> Pattern::count_vector(int sigma) const {
    std::vector<int> c(sigma, 0);
    for (Symbol s : symbols) {
        if (s < 0 || s >= sigma) throw PreconditionViolated("pattern symbol out of range");
        ++c[s];
    }
    return c;
}

int Instance::max_pattern_length() const {
    int ell = 0;
    for (const auto& p : patterns) ell = std::max(ell, p.length());
    return ell;
}

std::string Instance::render(const Arrangement& a) const {
    std::string out;
    out.reserve(a.size());
    for (Symbol s : a) {
        if (s < 0 || s >= static_cast<int>(labels.size()))
            throw PreconditionViolated("symbol id without label");
        out.push_back(labels[static_cast<std::size_t>(s)]);
    }
    return out;
}

Arrangement Instance::parse_symbols(const std::string& s) const {
    Arrangement out;
    out.reserve(s.size());
    for (char c : s) {
        auto pos = labels.find(c);
        if (pos == std::string::npos)
            throw PreconditionViolated(std::string("character not in alphabet: ") + c);
        out.push_back(static_cast<Symbol>(pos));
    }
    return out;
}

bool contains_substring(const std::vector<Symbol>& text_seq, const Pattern& pattern) {
    const auto& p = pattern.symbols;
    if (p.size() > text_seq.size()) return false;
    for (std::size_t i = 0; i + p.size() <= text_seq.size(); ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (text_seq[i + j] != p[j]) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

bool contains_subsequence(const std::vector<Symbol>& text_seq, const Pattern& pattern) {
    std::size_t j = 0;
    for (Symbol s : text_seq) {
        if (j < pattern.symbols.size() && s == pattern.symbols[j]) ++j;
    }
    return j == pattern.symbols.size();
}

bool contains(const std::vector<Symbol>& text_seq, const Pattern& pattern, Kind kind) {
    return kind == Kind::Substring ? contains_substring(text_seq, pattern)
                                   : contains_subsequence(text_seq, pattern);
}

bool is_arrangement_of(const Arrangement& arrangement, const MultisetText& text) {
    std::vector<int> c(text.counts.size(), 0);
    for (Symbol s : arrangement) {
        if (s < 0 || s >= text.sigma()) return false;
        ++c[s];
    }
    return c == text.counts;
}

std::vector<Violation> validate_instance(const Instance& instance) {
    std::vector<Violation> out;
    std::set<std::vector<Symbol>> seen;
    for (int i = 0; i < instance.pattern_count(); ++i) {
        const auto& p = instance.patterns[i];
        if (!seen.insert(p.symbols).second) {
            out.push_back({Violation::Code::DuplicatePattern, i,
                           "duplicate pattern at index " + std::to_string(i)});
        }
        if (!instance.text.covers(p.count_vector(instance.sigma()))) {
            out.push_back({Violation::Code::InfeasiblePattern, i,
                           "pattern at index " + std::to_string(i) +
                               " does not fit the text's symbol counts"});
        }
    }
    return out;
}

bool is_valid(const Instance& instance) { return validate_instance(instance).empty(); }

MultiPatternMatcher::MultiPatternMatcher(const std::vector<Pattern>& patterns, int sigma)
    : sigma_(sigma), pattern_count_(static_cast<int>(patterns.size())) {
    // trie; 0 is the root and also "no edge" during construction
    next_.emplace_back(sigma_, 0);
    out_.emplace_back();
    for (int pi = 0; pi < pattern_count_; ++pi) {
        int node = 0;
        for (Symbol s : patterns[pi].symbols) {
            int nxt = next_[node][s];
            if (nxt == 0) {
                nxt = static_cast<int>(next_.size());
                next_[node][s] = nxt;
                next_.emplace_back(sigma_, 0);
                out_.emplace_back();
            }
            node = nxt;
        }
        out_[node].push_back(pi);
    }
    // BFS to convert goto into a full transition table with fail-merged outputs
    std::vector<int> fail(next_.size(), 0);
    std::queue<int> q;
    for (int s = 0; s < sigma_; ++s) {
        int v = next_[0][s];
        if (v != 0) {
            fail[v] = 0;
            q.push(v);
        }
    }
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        const auto& fo = out_[fail[u]];
        out_[u].insert(out_[u].end(), fo.begin(), fo.end());
        for (int s = 0; s < sigma_; ++s) {
            int v = next_[u][s];
            if (v != 0) {
                fail[v] = next_[fail[u]][s];
                q.push(v);
            } else {
                next_[u][s] = next_[fail[u]][s];
            }
        }
    }
}

std::vector<int> MultiPatternMatcher::match(const std::vector<Symbol>& text_seq) const {
    std::vector<char> hit(pattern_count_, 0);
    int node = 0;
    for (Symbol s : text_seq) {
        node = next_[node][s];
        for (int pi : out_[node]) hit[pi] = 1;
    }
    std::vector<int> matched;
    for (int i = 0; i < pattern_count_; ++i)
        if (hit[i]) matched.push_back(i);
    return matched;
}

std::vector<int> matched_patterns_naive(const Instance& instance,
                                        const Arrangement& arrangement) {
    std::vector<int> matched;
    for (int i = 0; i < instance.pattern_count(); ++i)
        if (contains(arrangement, instance.patterns[i], instance.kind)) matched.push_back(i);
    return matched;
}

SolutionReport score_arrangement(const Instance& instance, const Arrangement& arrangement) {
    if (!is_arrangement_of(arrangement, instance.text))
        throw ArrangementMismatch("arrangement is not a permutation of the text multiset");
    SolutionReport rep;
    rep.arrangement = arrangement;
    rep.algorithm = "score";
    if (instance.kind == Kind::Substring) {
        MultiPatternMatcher matcher(instance.patterns, instance.sigma());
        rep.matched = matcher.match(arrangement);
    } else {
        rep.matched = matched_patterns_naive(instance, arrangement);
    }
    rep.score = static_cast<int>(rep.matched.size());
    return rep;
}

}  // namespace rcs
