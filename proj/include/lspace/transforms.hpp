#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lspace/analysis.hpp"
#include "lspace/derivation_tree.hpp"
#include "lspace/grammar.hpp"
#include "lspace/mappings.hpp"

namespace lspace {

// --- expansions -------------------------------------------------------------

/// Per binary symbol ("0", "1"): Fib generation indices whose words are
/// concatenated to form that symbol's new body.
struct ExpansionSpec {
    std::map<std::string, std::vector<std::size_t>> generations;

    /// Parses `0=3 1=4` or `0=4,3 1=5,4`.
    static ExpansionSpec parse(std::string_view text);
};

struct ExpansionResult {
    Grammar grammar;
    bool skip = false;
    bool preserves_fib_counts = false;          ///< matches_fibonacci on every symbol, t = 1..12
    bool counts_are_fibonacci_numbers = false;  ///< every count for t = 1..12 is a Fibonacci number
};

inline constexpr std::size_t kMaxExpansionGeneration = 40;

/// Throws IndexOutOfRange for indices outside 1..kMaxExpansionGeneration or a missing symbol.
ExpansionResult expand_generations(const ExpansionSpec& spec);

// --- edits ------------------------------------------------------------------

struct AddConstant {
    std::string name;
    std::vector<std::pair<std::string, std::size_t>> placements; ///< (rule lhs, rhs position)
};
struct RemoveConstant {
    std::string name;
};
struct PermuteSymbols {
    std::map<std::string, std::string> mapping;
};
struct AdvanceConstituent {
    std::string rule;
    std::size_t begin = 0;
    std::size_t end = 0; ///< exclusive
};

using GrammarEdit = std::variant<AddConstant, RemoveConstant, PermuteSymbols, AdvanceConstituent>;

/// Parses `add_constant e 0:1 1:2`, `remove_constant e`, `permute 0=1,1=0`,
/// `advance 1 0 2`.
GrammarEdit parse_edit(std::string_view text);

Grammar edit_grammar(const Grammar& g, const GrammarEdit& edit);

// --- pruning and reduction ---------------------------------------------------

/// Excises `chunk` from rhs(target) at `position`. The chunk must be a Fib
/// constituent (NotConstituent) occurring there (NotPresent).
Grammar prune_rule(const Grammar& g, std::string_view target, const Word& chunk, std::size_t position,
                   bool allow_mappings = true);

enum class MinimalTarget { Fib, XOR };
std::string_view to_string(MinimalTarget t) noexcept;

struct ReductionStep {
    enum class Kind { Prune, RemoveConstant } kind = Kind::Prune;
    std::string symbol;            ///< rule lhs for Prune, the constant for RemoveConstant
    std::string chunk;             ///< rendered chunk (Prune)
    std::size_t position = 0;
    std::size_t generation = 0;    ///< constituent generation of the chunk
    MappingExpr mapping = MappingExpr::Id;
};

struct ReductionProof {
    Grammar source;
    std::vector<ReductionStep> steps;
    Grammar final_grammar;
};

struct ReductionResult {
    bool success = false;
    std::optional<ReductionProof> proof;
    std::size_t visited = 0;
    bool exhausted = false; ///< the whole reachable space was explored
    std::string reason;
};

inline constexpr std::size_t kDefaultSearchBound = 10'000;

ReductionResult reduce_to_minimal(const Grammar& g, MinimalTarget target,
                                  std::size_t search_bound = kDefaultSearchBound, bool allow_mappings = true);

/// Replays the proof steps from `source`.
Grammar replay(const Grammar& source, const std::vector<ReductionStep>& steps);

// --- tree operations ----------------------------------------------------------

enum class TreeOpKind { Collapse, Percolate, UPrune, Atomize };
std::string_view to_string(TreeOpKind k) noexcept;
TreeOpKind parse_tree_op(std::string_view text);

struct TreeOp {
    TreeOpKind kind;
    std::vector<std::size_t> path; ///< selected node; for Atomize the first sister of the span
    std::size_t span = 2;          ///< Atomize only: number of sisters
};

/// Collapse/percolate act on a node whose label equals its branching parent's
/// label and the first root's label (the axiom, 0 in the Fib trees).
DerivationTree tree_transform(const DerivationTree& t, const TreeOp& op);

} // namespace lspace
