#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lspace/grammar.hpp"

namespace lspace {

/// Ordered forest recording which symbol each symbol of a derivation came from.
///
/// Nodes live in an arena and refer to each other by index. A node's label is
/// normally one symbol; atomized nodes carry the concatenated labels of the
/// sisters they replaced and render bracketed, e.g. `[01]`.
class DerivationTree {
public:
    using NodeId = std::size_t;

    struct Node {
        Word label;
        std::size_t depth = 0;
        std::vector<NodeId> children;
        bool erased = false; ///< erasing symbol: leaf with no descendants
        bool atom = false;   ///< produced by atomization
    };

    DerivationTree() = default;
    explicit DerivationTree(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::vector<NodeId>& roots() const noexcept { return roots_; }
    const Node& node(NodeId id) const { return nodes_.at(id); }
    Node& node(NodeId id) { return nodes_.at(id); }

    /// Number of nodes reachable from the roots.
    std::size_t size() const;
    std::size_t arena_size() const noexcept { return nodes_.size(); }

    NodeId add_root(Word label, bool erased = false);
    NodeId add_child(NodeId parent, Word label, bool erased = false);
    /// Adds a detached node; the caller links it.
    NodeId add_node(Node n);
    std::vector<NodeId>& mutable_roots() noexcept { return roots_; }

    /// Labels of all nodes at `depth`, read left to right. Atomized labels are spliced in.
    Word frontier(std::size_t depth) const;
    /// Node count at `depth`.
    std::size_t width(std::size_t depth) const;
    std::size_t max_depth() const;

    /// Resolves a dotted path: first component is a root index, the rest child indices.
    NodeId resolve(const std::vector<std::size_t>& path) const;
    /// Parent of `id`, or npos for roots.
    NodeId parent(NodeId id) const;
    static constexpr NodeId npos = static_cast<NodeId>(-1);

    /// Bracket notation, e.g. `0(1(0,1))`.
    std::string to_string() const;
    std::string to_string(NodeId id) const;
    std::string label_text(NodeId id) const;

    /// Structural equality of the subtrees rooted at `a` and `b`.
    bool same_subtree(NodeId a, const DerivationTree& other, NodeId b) const;

private:
    Alphabet alphabet_;
    std::vector<Node> nodes_;
    std::vector<NodeId> roots_;
};

/// Tree of derive(g, n): each node's children are the rhs of its production,
/// stumps repeat as unary chains, erasing symbols are leaves marked erased.
DerivationTree derive_tree(const Grammar& g, std::size_t n, std::size_t length_cap = kDefaultLengthCap);

/// Parses bracket notation such as `0(0,1)`; a label is the trimmed text between
/// delimiters. Nodes whose label is listed in `erasing` are marked erased.
DerivationTree parse_tree(std::string_view text, const std::vector<std::string>& erasing = {});

std::vector<std::size_t> parse_path(std::string_view dotted);

} // namespace lspace
