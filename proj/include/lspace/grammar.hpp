#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lspace/symbol.hpp"

namespace lspace {

inline constexpr std::size_t kDefaultLengthCap = 10'000'000;

struct Production {
    Symbol lhs;
    Word rhs; ///< empty means erasing

    bool operator==(const Production&) const = default;
};

/// Deterministic context-free L-grammar (D0L): at most one production per symbol.
///
/// Symbols without a production are stumps and persist unchanged under a step.
/// Symbols whose production is empty are erasing and vanish after one step.
/// A symbol may additionally carry ordered alternatives (`N -> man | ball`),
/// which only the sequential derivation consumes; parallel rewriting always
/// uses the first alternative.
class Grammar {
public:
    Grammar() = default;

    /// Builds a grammar over an explicit alphabet. Every axiom/rhs symbol must
    /// belong to `alphabet`; throws DuplicateRule, MissingAxiom, ForeignSymbol.
    Grammar(Alphabet alphabet, Word axiom, const std::vector<Production>& productions);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const Word& axiom() const noexcept { return axiom_; }

    /// First-alternative production of `s`, or nullptr for a stump.
    const Production* production(Symbol s) const;
    const std::vector<Word>& alternatives(Symbol s) const;

    bool is_stump(Symbol s) const { return production(s) == nullptr; }
    bool is_erasing(Symbol s) const;
    /// Stump or erasing: contributes nothing to a rule's index by default.
    bool is_null(Symbol s) const { return is_stump(s) || is_erasing(s); }

    /// Productions in declaration order.
    std::vector<Production> productions() const;
    std::vector<Symbol> stumps() const;

    /// Adds an alternative body for an already-declared symbol (sequential mode only).
    void add_alternative(Symbol lhs, Word rhs);

    /// Convenience for the many binary grammars: symbol by name, throws if absent.
    Symbol symbol(std::string_view name) const;

    bool operator==(const Grammar& other) const;

private:
    Alphabet alphabet_;
    Word axiom_;
    std::vector<Symbol> order_;                 // declaration order of lhs symbols
    std::vector<std::vector<Word>> bodies_;     // indexed by symbol; empty vector = stump
    std::vector<std::optional<Production>> primary_;
};

/// Parses the line-oriented grammar format:
///   axiom: <sym> [<sym> ...]
///   <sym> -> <sym> [<sym> ...] [| <sym> ...]
///   <sym> -> ~
/// `#` starts a comment. Symbols are whitespace-separated atoms.
Grammar parse_grammar(std::string_view text);

/// Serializes back into the grammar file format.
std::string to_text(const Grammar& g);

enum class Severity { Info, Warning, Error };

struct Diagnostic {
    Severity severity;
    std::string code;
    std::string message;
    std::optional<Symbol> location;
};

struct Diagnostics {
    std::vector<Diagnostic> entries;
    std::vector<Symbol> stumps; ///< stump inventory, informational

    bool empty() const noexcept { return entries.empty(); }
    bool has(std::string_view code) const;
};

Diagnostics validate(const Grammar& g);

/// One parallel rewriting step. Throws ForeignSymbol.
Word step(const Grammar& g, const Word& s);

struct Derivation {
    Grammar grammar;
    std::vector<Word> generations; ///< generations[0] is the axiom

    const Word& operator[](std::size_t t) const { return generations.at(t); }
    std::size_t size() const noexcept { return generations.size(); }
    std::string render(std::size_t t) const { return lspace::render(grammar.alphabet(), generations.at(t)); }
};

/// Generations 0..n. Throws LengthCapExceeded before materializing a generation
/// longer than `length_cap`.
Derivation derive(const Grammar& g, std::size_t n, std::size_t length_cap = kDefaultLengthCap);

/// Visits the symbols of generation `t` left to right without materializing
/// it; memory is O(t). Useful for scans of generations beyond the length cap.
void for_each_symbol(const Grammar& g, std::size_t t, const std::function<void(Symbol)>& visit);

enum class SequentialStrategy {
    Leftmost,   ///< rewrite the leftmost symbol that has a production
    RuleCycle,  ///< try rules round-robin in declaration order, each at its leftmost occurrence
};

struct SequentialDerivation {
    std::vector<Word> forms;
    bool truncated = false; ///< stopped by step_limit while a rewrite was still possible
};

/// Sequential (one rewrite per step) derivation for contrast with parallel
/// rewriting. Alternatives of a symbol are consumed in file order, cycling.
SequentialDerivation derive_sequential(const Grammar& g, std::size_t step_limit,
                                       SequentialStrategy strategy = SequentialStrategy::Leftmost);

} // namespace lspace
