#include <algorithm>
#include <functional>

#include "lspace/error.hpp"
#include "lspace/transforms.hpp"

namespace lspace {

namespace {

using NodeId = DerivationTree::NodeId;

// Children list holding `id`: its parent's, or the root list.
std::vector<NodeId>& siblings_of(DerivationTree& t, NodeId id)
{
    const NodeId p = t.parent(id);
    return p == DerivationTree::npos ? t.mutable_roots() : t.node(p).children;
}

void renumber_depths(DerivationTree& t)
{
    std::function<void(NodeId, std::size_t)> visit = [&](NodeId id, std::size_t depth) {
        t.node(id).depth = depth;
        for (NodeId c : t.node(id).children) visit(c, depth + 1);
    };
    for (NodeId r : t.roots()) visit(r, 0);
}

bool empty_node(const DerivationTree& t, NodeId id)
{
    return t.node(id).erased || t.node(id).label.empty();
}

struct Pair {
    NodeId parent;
    NodeId sister;
};

// Shared precondition of collapse and percolate.
Pair axiom_pair(const DerivationTree& t, NodeId selected)
{
    const NodeId parent = t.parent(selected);
    if (parent == DerivationTree::npos) throw Error(ErrorCode::NotApplicable, "selected node is a root");
    const auto& ch = t.node(parent).children;
    if (ch.size() != 2) throw Error(ErrorCode::NotApplicable, "parent is not a binary branching node");
    const Word& axiom_label = t.node(t.roots().front()).label;
    if (t.node(selected).label != axiom_label || t.node(parent).label != axiom_label)
        throw Error(ErrorCode::NotApplicable, "selected node and its parent must carry the axiom label");
    const NodeId sister = ch[0] == selected ? ch[1] : ch[0];
    if (empty_node(t, sister)) throw Error(ErrorCode::EmptySister, "the sister is empty; the pair does not collapse");
    return {parent, sister};
}

} // namespace

std::string_view to_string(TreeOpKind k) noexcept
{
    switch (k) {
    case TreeOpKind::Collapse: return "collapse";
    case TreeOpKind::Percolate: return "percolate";
    case TreeOpKind::UPrune: return "u_prune";
    case TreeOpKind::Atomize: return "atomize";
    }
    return "?";
}

TreeOpKind parse_tree_op(std::string_view text)
{
    for (auto k : {TreeOpKind::Collapse, TreeOpKind::Percolate, TreeOpKind::UPrune, TreeOpKind::Atomize})
        if (to_string(k) == text) return k;
    if (text == "u-prune" || text == "prune") return TreeOpKind::UPrune;
    throw Error(ErrorCode::InvalidArgument, "unknown tree operation '" + std::string(text) + "'");
}

DerivationTree tree_transform(const DerivationTree& t, const TreeOp& op)
{
    DerivationTree out = t;
    const NodeId selected = out.resolve(op.path);

    switch (op.kind) {
    case TreeOpKind::Collapse: {
        const auto [parent, sister] = axiom_pair(out, selected);
        out.node(parent).children = {sister};
        break;
    }
    case TreeOpKind::Percolate: {
        const auto [parent, sister] = axiom_pair(out, selected);
        auto& sibs = siblings_of(out, parent);
        *std::find(sibs.begin(), sibs.end(), parent) = sister;
        break;
    }
    case TreeOpKind::UPrune: {
        const auto& ch = out.node(selected).children;
        if (ch.size() != 1) throw Error(ErrorCode::NotApplicable, "u_prune needs a non-branching node");
        const NodeId child = ch.front();
        auto& sibs = siblings_of(out, selected);
        const bool dominates_atom = out.node(child).atom;
        const bool beside_atom =
            std::any_of(sibs.begin(), sibs.end(), [&](NodeId s) { return s != selected && out.node(s).atom; });
        if (!dominates_atom && !beside_atom)
            throw Error(ErrorCode::NotApplicable, "u_prune applies next to or above an atomized node");
        if (empty_node(out, child)) throw Error(ErrorCode::EmptySister, "the spliced child is empty");
        *std::find(sibs.begin(), sibs.end(), selected) = child;
        break;
    }
    case TreeOpKind::Atomize: {
        if (op.span < 2) throw Error(ErrorCode::InvalidSpan, "atomize needs at least two sisters");
        auto& sibs = siblings_of(out, selected);
        const auto first = static_cast<std::size_t>(std::find(sibs.begin(), sibs.end(), selected) - sibs.begin());
        if (first + op.span > sibs.size()) throw Error(ErrorCode::InvalidSpan, "span runs past the last sister");
        DerivationTree::Node atom;
        atom.atom = true;
        atom.depth = out.node(selected).depth;
        for (std::size_t k = first; k < first + op.span; ++k) {
            if (empty_node(out, sibs[k])) throw Error(ErrorCode::EmptySister, "an empty node cannot be atomized");
            const Word& l = out.node(sibs[k]).label;
            atom.label.insert(atom.label.end(), l.begin(), l.end());
        }
        const NodeId id = out.add_node(std::move(atom));
        // add_node may reallocate the arena, so take the sibling list again.
        auto& list = siblings_of(out, selected);
        list.erase(list.begin() + static_cast<std::ptrdiff_t>(first), list.begin() + static_cast<std::ptrdiff_t>(first + op.span));
        list.insert(list.begin() + static_cast<std::ptrdiff_t>(first), id);
        break;
    }
    }
    renumber_depths(out);
    return out;
}

} // namespace lspace
