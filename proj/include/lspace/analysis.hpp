#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "lspace/grammar.hpp"
#include "lspace/mappings.hpp"

namespace lspace {

using Rational = boost::rational<std::int64_t>;
using Count = std::uint64_t;

// --- Fibonacci words --------------------------------------------------------

/// Generation `n` of the minimal Fib grammar 0 -> 1, 1 -> 0 1 from axiom 0, as '0'/'1' text.
const std::string& fib_word(std::size_t n);
/// Generation `n` of the Thue-Morse (XOR) grammar 0 -> 0 1, 1 -> 1 0 from axiom 0.
const std::string& thue_morse_word(std::size_t n);

/// The two minimal grammars everything is reduced to.
Grammar minimal_fib_grammar();
Grammar minimal_xor_grammar();

// --- growth ----------------------------------------------------------------

struct GrowthProfile {
    std::vector<Symbol> symbols;          ///< alphabet order
    std::vector<std::vector<Count>> counts; ///< counts[t][k] = occurrences of symbols[k] in g_t
    std::vector<Count> totals;

    /// Sequence of counts of `s` for t = first..last inclusive.
    std::vector<Count> series(Symbol s, std::size_t first, std::size_t last) const;
};

GrowthProfile growth_profile(const Derivation& d);

/// Same counts computed without materializing strings, by iterating the
/// production (Parikh) matrix. Throws Overflow if a count exceeds 64 bits.
GrowthProfile count_profile(const Grammar& g, std::size_t n);

struct FibonacciMatch {
    bool matches = false;
    std::size_t burn_in = 0;
};

/// True iff for some burn_in <= 2 every seq[t] (t > burn_in + 1) is the sum of
/// the two preceding terms, over at least three consecutive triples.
/// Throws TooShort for fewer than four terms.
FibonacciMatch matches_fibonacci(const std::vector<Count>& seq);

bool is_fibonacci_number(Count n);

// --- legality and constituency ----------------------------------------------

struct Violation {
    std::string ngram;
    std::size_t position;
};

struct LegalityReport {
    bool legal = true;
    std::vector<Violation> violations;
};

/// Scans for the Fib-illegal factors "00" and "111". Throws NotBinary.
LegalityReport fib_legal(std::string_view s);

enum class ConstituentFamily { Fib, ThueMorse };

struct Constituency {
    bool yes = false;
    std::size_t generation = 0;
    MappingExpr mapping = MappingExpr::Id;
};

/// s equals e(g_i) for a generation g_i of the same length. ID is preferred over
/// any mapping, then the lower generation, then M < N < MN.
Constituency is_constituent(std::string_view s, ConstituentFamily family, bool allow_mappings);
Constituency is_fib_constituent(std::string_view s, bool allow_mappings);

// --- ratios -----------------------------------------------------------------

struct RatioProfile {
    std::vector<std::optional<Rational>> ratios; ///< index t-1 for t = 1..n; nullopt when the denominator is 0
};

struct RatioComparison {
    bool equal = false;
    RatioProfile first;
    RatioProfile second;
};

RatioProfile ratio_profile(const Grammar& g, std::string_view numerator, std::string_view denominator,
                           std::size_t n);
RatioComparison ratio_profiles_equal(const Grammar& g1, const Grammar& g2, std::string_view numerator,
                                     std::string_view denominator, std::size_t n);

// --- self-reference -----------------------------------------------------------

struct Segment {
    std::size_t generation;
    MappingExpr mapping;

    bool operator==(const Segment&) const = default;
};

enum class DecompositionKind { Perfect, Partial };

struct Decomposition {
    std::size_t target;
    std::vector<Segment> segments;
    DecompositionKind kind;
};

/// Minimal exact cover of g_x by mapped earlier generations. Prefers a cover
/// using only ID, then fewest segments, then the lexicographically smallest
/// (generation, mapping) sequence. Throws IndexOutOfRange unless 2 <= x < d.size().
std::optional<Decomposition> decompose_self_referential(const Derivation& d, std::size_t x,
                                                        const Involution& inv);

/// Concatenation of the segment images; equals g_x for a sound decomposition.
Word reassemble(const Derivation& d, const Decomposition& dec, const Involution& inv);

// --- repetitions -----------------------------------------------------------------

struct RepetitionStats {
    Rational max_exponent{0};
    bool has_cube = false;
    std::size_t position = 0; ///< witness factor start
    std::size_t period = 0;
    std::size_t length = 0;   ///< witness factor length
};

/// Brute force over every period p <= max_period: longest factor with period p.
/// Quadratic: O(|s| * max_period) symbol comparisons.
RepetitionStats repetition_stats(const Word& s, std::size_t max_period);

// --- closure probes --------------------------------------------------------------

enum class ClosureOp { Union, Concat, Star };
std::string_view to_string(ClosureOp op) noexcept;

struct ClosureResult {
    bool holds_at_bound = true;
    std::optional<std::string> counterexample;
    std::size_t tested = 0;
};

inline constexpr std::size_t kDefaultStarBound = 3;

/// Applies `op` to finite sets of binary strings and tests fib_legal on every
/// result. Star uses only `a`, with 1..bound factors. Bounded evidence only.
ClosureResult closure_probe(const std::vector<std::string>& a, const std::vector<std::string>& b,
                            ClosureOp op, std::size_t bound = kDefaultStarBound);

} // namespace lspace
