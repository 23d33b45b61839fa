#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "lspace/grammar.hpp"

namespace lspace {

/// How null symbols (stumps and erasing symbols) take part in classification.
struct CountingMode {
    bool index_counts_stumps = false;         ///< count null symbols in a rule's index
    bool containment_includes_stumps = true;  ///< compare full rhs (with nulls) for containment

    bool operator==(const CountingMode&) const = default;
};

/// Index of a production: number of rhs symbols, optionally ignoring null symbols.
std::size_t rule_index(const Grammar& g, const Production& p, const CountingMode& mode);

enum class Asymmetry { None, Weak, Strong };
std::string_view to_string(Asymmetry a) noexcept;

struct ClassificationReport {
    bool symmetric = false;
    Asymmetry asymmetry = Asymmetry::None;
    std::optional<Symbol> strong_term;
    std::optional<Symbol> weak_term;
    std::optional<Word> remainder;
    std::optional<bool> remainder_is_fib_constituent;
    bool exhaustive = false;
    CountingMode mode;
};

ClassificationReport classify(const Grammar& g, const CountingMode& mode = {});

enum class AxiomSchema { I, II, III };         ///< axiom -> non-axiom | non-axiom axiom | non-axiom non-axiom
enum class NonAxiomSchema { IV, V, VI };       ///< non-axiom -> axiom | axiom non-axiom | non-axiom non-axiom
enum class Family { Fib, XOR, Feigenbaum, TrivialAlternation, Degenerate, FibMappable };

std::string_view to_string(AxiomSchema s) noexcept;
std::string_view to_string(NonAxiomSchema s) noexcept;
std::string_view to_string(Family f) noexcept;

struct RuleFormat {
    AxiomSchema axiom_rule;
    NonAxiomSchema nonaxiom_rule;
    Family family;
};

Family family_of(AxiomSchema a, NonAxiomSchema n) noexcept;

/// Throws NotBinaryMinimal unless the grammar has two symbols, a one-symbol
/// axiom and 1-2 symbol bodies for both symbols matching one of the schemas.
RuleFormat rule_format(const Grammar& g);

// --- dynamical frustration (multi-symbol left-hand sides) ------------------

struct RewriteRule {
    Word lhs;
    Word rhs;
};

/// Parses `lhs -> rhs` lines; each side is tokenized like free text.
std::vector<RewriteRule> parse_rewrite_rules(Alphabet& alphabet, std::string_view text);

struct RuleMatch {
    std::size_t rule;  ///< index into the rule list
    std::size_t start;
    std::size_t length;

    bool overlaps(const RuleMatch& o) const noexcept
    {
        return start < o.start + o.length && o.start < start + length;
    }
    bool operator==(const RuleMatch&) const = default;
};

enum class FrustrationVerdict { Frustrated, NotFrustrated, NotApplicable };
std::string_view to_string(FrustrationVerdict v) noexcept;

struct TilingConflict {
    Word sample;
    std::vector<RuleMatch> matches;                         ///< sorted by (start, rule)
    std::vector<std::pair<std::size_t, std::size_t>> conflicts; ///< indices into matches
    std::size_t distinct_tilings = 0;
    bool tilings_truncated = false;
    FrustrationVerdict verdict = FrustrationVerdict::NotApplicable;
};

inline constexpr std::size_t kDefaultTilingBound = 10'000;

TilingConflict detect_frustration(const std::vector<RewriteRule>& rules, const Word& sample,
                                  std::size_t enumeration_bound = kDefaultTilingBound);

} // namespace lspace
