#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Core model for restricted common superstring / supersequence instances:
// a symbol multiset (the resource budget), a set of distinct patterns, and
// the scoring machinery shared by every solver.
namespace rcs {

using Symbol = int;

enum class Kind { Substring, Subsequence };

std::string kind_name(Kind k);
Kind kind_from_name(const std::string& name);

struct ArrangementMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PreconditionViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SizeLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Occurrence counts per symbol id; ids are dense 0..sigma-1.
struct MultisetText {
    std::vector<int> counts;

    MultisetText() = default;
    explicit MultisetText(std::vector<int> c) : counts(std::move(c)) {}

    int sigma() const { return static_cast<int>(counts.size()); }
    int total() const;
    bool covers(const std::vector<int>& need) const;

    // Symbols expanded in ascending id order.
    std::vector<Symbol> expand() const;

    bool operator==(const MultisetText&) const = default;
};

struct Pattern {
    std::vector<Symbol> symbols;

    Pattern() = default;
    explicit Pattern(std::vector<Symbol> s) : symbols(std::move(s)) {
        if (symbols.empty()) throw PreconditionViolated("empty pattern");
    }

    int length() const { return static_cast<int>(symbols.size()); }
    std::vector<int> count_vector(int sigma) const;

    bool operator==(const Pattern&) const = default;
};

using Arrangement = std::vector<Symbol>;

struct Instance {
    // labels[i] is the printable character for symbol i; used only at the
    // I/O boundary. Solvers see integer ids.
    std::string labels;
    MultisetText text;
    std::vector<Pattern> patterns;
    Kind kind = Kind::Substring;

    int sigma() const { return text.sigma(); }
    int pattern_count() const { return static_cast<int>(patterns.size()); }
    int max_pattern_length() const;

    std::string render(const Arrangement& a) const;
    Arrangement parse_symbols(const std::string& s) const;

    bool operator==(const Instance&) const = default;
};

struct SolutionReport {
    int score = 0;
    std::vector<int> matched;  // pattern indices, ascending
    Arrangement arrangement;
    std::string algorithm;
    double elapsed_ms = 0.0;
    std::optional<std::uint64_t> seed;
};

struct Violation {
    enum class Code { DuplicatePattern, InfeasiblePattern };
    Code code;
    int pattern_index;
    std::string message;
};

bool contains_substring(const std::vector<Symbol>& text_seq, const Pattern& pattern);
bool contains_subsequence(const std::vector<Symbol>& text_seq, const Pattern& pattern);
bool contains(const std::vector<Symbol>& text_seq, const Pattern& pattern, Kind kind);

bool is_arrangement_of(const Arrangement& arrangement, const MultisetText& text);

std::vector<Violation> validate_instance(const Instance& instance);
bool is_valid(const Instance& instance);

// Aho-Corasick matcher over all patterns of one instance. Built once,
// scored against many arrangements by the bench harness.
class MultiPatternMatcher {
public:
    MultiPatternMatcher(const std::vector<Pattern>& patterns, int sigma);

    // Indices of patterns occurring contiguously in text_seq, ascending.
    std::vector<int> match(const std::vector<Symbol>& text_seq) const;

private:
    int sigma_;
    int pattern_count_;
    std::vector<std::vector<int>> next_;  // node -> symbol -> node
    std::vector<std::vector<int>> out_;   // node -> pattern ids (fail-merged)
};

// Throws ArrangementMismatch if the arrangement is not a permutation of
// instance.text.
SolutionReport score_arrangement(const Instance& instance, const Arrangement& arrangement);

// Naive per-pattern scan, kept as the differential-testing oracle for the
// automaton path.
std::vector<int> matched_patterns_naive(const Instance& instance,
                                        const Arrangement& arrangement);

}  // namespace rcs
