#include "lspace/derivation_tree.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "lspace/error.hpp"

namespace lspace {

std::size_t DerivationTree::size() const
{
    std::size_t n = 0;
    std::vector<NodeId> stack(roots_.rbegin(), roots_.rend());
    while (!stack.empty()) {
        const NodeId id = stack.back();
        stack.pop_back();
        ++n;
        const auto& ch = nodes_[id].children;
        stack.insert(stack.end(), ch.rbegin(), ch.rend());
    }
    return n;
}

DerivationTree::NodeId DerivationTree::add_root(Word label, bool erased)
{
    const NodeId id = add_node(Node{std::move(label), 0, {}, erased, false});
    roots_.push_back(id);
    return id;
}

DerivationTree::NodeId DerivationTree::add_child(NodeId parent, Word label, bool erased)
{
    const std::size_t depth = nodes_.at(parent).depth + 1;
    const NodeId id = add_node(Node{std::move(label), depth, {}, erased, false});
    nodes_[parent].children.push_back(id);
    return id;
}

DerivationTree::NodeId DerivationTree::add_node(Node n)
{
    nodes_.push_back(std::move(n));
    return nodes_.size() - 1;
}

Word DerivationTree::frontier(std::size_t depth) const
{
    Word out;
    std::function<void(NodeId)> visit = [&](NodeId id) {
        const auto& n = nodes_[id];
        if (n.depth == depth) {
            out.insert(out.end(), n.label.begin(), n.label.end());
            return;
        }
        for (NodeId c : n.children) visit(c);
    };
    for (NodeId r : roots_) visit(r);
    return out;
}

std::size_t DerivationTree::width(std::size_t depth) const
{
    std::size_t n = 0;
    std::function<void(NodeId)> visit = [&](NodeId id) {
        if (nodes_[id].depth == depth) {
            ++n;
            return;
        }
        for (NodeId c : nodes_[id].children) visit(c);
    };
    for (NodeId r : roots_) visit(r);
    return n;
}

std::size_t DerivationTree::max_depth() const
{
    std::size_t d = 0;
    std::function<void(NodeId)> visit = [&](NodeId id) {
        d = std::max(d, nodes_[id].depth);
        for (NodeId c : nodes_[id].children) visit(c);
    };
    for (NodeId r : roots_) visit(r);
    return d;
}

DerivationTree::NodeId DerivationTree::resolve(const std::vector<std::size_t>& path) const
{
    if (path.empty() || path.front() >= roots_.size()) throw Error(ErrorCode::InvalidSelector, "path does not name a root");
    NodeId id = roots_[path.front()];
    for (std::size_t k = 1; k < path.size(); ++k) {
        const auto& ch = nodes_[id].children;
        if (path[k] >= ch.size()) throw Error(ErrorCode::InvalidSelector, "path leaves the tree at component " + std::to_string(k));
        id = ch[path[k]];
    }
    return id;
}

DerivationTree::NodeId DerivationTree::parent(NodeId id) const
{
    for (NodeId p = 0; p < nodes_.size(); ++p) {
        const auto& ch = nodes_[p].children;
        if (std::find(ch.begin(), ch.end(), id) != ch.end()) return p;
    }
    return npos;
}

std::string DerivationTree::label_text(NodeId id) const
{
    const auto& n = nodes_.at(id);
    std::string s;
    for (std::size_t i = 0; i < n.label.size(); ++i) {
        if (i && !alphabet_.single_character()) s.push_back(' ');
        s += alphabet_.name(n.label[i]);
    }
    return n.atom ? "[" + s + "]" : s;
}

std::string DerivationTree::to_string(NodeId id) const
{
    std::string s = label_text(id);
    const auto& ch = nodes_[id].children;
    if (ch.empty()) return s;
    s.push_back('(');
    for (std::size_t i = 0; i < ch.size(); ++i) {
        if (i) s.push_back(',');
        s += to_string(ch[i]);
    }
    s.push_back(')');
    return s;
}

std::string DerivationTree::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < roots_.size(); ++i) {
        if (i) s += ' ';
        s += to_string(roots_[i]);
    }
    return s;
}

bool DerivationTree::same_subtree(NodeId a, const DerivationTree& other, NodeId b) const
{
    const auto& x = nodes_.at(a);
    const auto& y = other.nodes_.at(b);
    if (label_text(a) != other.label_text(b) || x.erased != y.erased || x.atom != y.atom ||
        x.children.size() != y.children.size())
        return false;
    for (std::size_t i = 0; i < x.children.size(); ++i)
        if (!same_subtree(x.children[i], other, y.children[i])) return false;
    return true;
}

DerivationTree derive_tree(const Grammar& g, std::size_t n, std::size_t length_cap)
{
    // derive() enforces the cap and validates symbols.
    const Derivation d = derive(g, n, length_cap);
    DerivationTree t(g.alphabet());

    std::vector<DerivationTree::NodeId> level;
    for (Symbol s : g.axiom()) level.push_back(t.add_root({s}, g.is_erasing(s)));

    for (std::size_t depth = 0; depth < n; ++depth) {
        std::vector<DerivationTree::NodeId> next;
        next.reserve(d.generations[depth + 1].size());
        for (auto id : level) {
            const Symbol s = t.node(id).label.front();
            const auto* p = g.production(s);
            if (!p) {
                next.push_back(t.add_child(id, {s}, false));
                continue;
            }
            for (Symbol c : p->rhs) next.push_back(t.add_child(id, {c}, g.is_erasing(c)));
        }
        level = std::move(next);
    }
    return t;
}

DerivationTree parse_tree(std::string_view text, const std::vector<std::string>& erasing)
{
    Alphabet alphabet;
    DerivationTree t;
    struct Pending {
        std::string label;
        std::vector<Pending> children;
    };

    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n')) ++i;
    };
    std::function<Pending()> parse_node = [&]() -> Pending {
        skip();
        const std::size_t start = i;
        while (i < text.size() && text[i] != '(' && text[i] != ')' && text[i] != ',') ++i;
        std::string_view raw = text.substr(start, i - start);
        while (!raw.empty() && (raw.back() == ' ' || raw.back() == '\t')) raw.remove_suffix(1);
        if (raw.empty()) throw Error(ErrorCode::SyntaxError, "empty node label at offset " + std::to_string(start));
        Pending p{std::string(raw), {}};
        skip();
        if (i < text.size() && text[i] == '(') {
            ++i;
            for (;;) {
                p.children.push_back(parse_node());
                skip();
                if (i < text.size() && text[i] == ',') {
                    ++i;
                    continue;
                }
                if (i < text.size() && text[i] == ')') {
                    ++i;
                    break;
                }
                throw Error(ErrorCode::SyntaxError, "expected ',' or ')' at offset " + std::to_string(i));
            }
        }
        return p;
    };

    std::vector<Pending> roots;
    skip();
    while (i < text.size()) {
        roots.push_back(parse_node());
        skip();
    }
    if (roots.empty()) throw Error(ErrorCode::SyntaxError, "empty tree");

    std::function<void(const Pending&)> intern_all = [&](const Pending& p) {
        alphabet.intern(p.label);
        for (const auto& c : p.children) intern_all(c);
    };
    for (const auto& r : roots) intern_all(r);
    t = DerivationTree(alphabet);

    auto is_erasing = [&](const std::string& label) {
        return std::find(erasing.begin(), erasing.end(), label) != erasing.end();
    };
    std::function<void(DerivationTree::NodeId, const Pending&)> build = [&](DerivationTree::NodeId id, const Pending& p) {
        for (const auto& c : p.children) build(t.add_child(id, {*alphabet.find(c.label)}, is_erasing(c.label)), c);
    };
    for (const auto& r : roots) build(t.add_root({*alphabet.find(r.label)}, is_erasing(r.label)), r);
    return t;
}

std::vector<std::size_t> parse_path(std::string_view dotted)
{
    std::vector<std::size_t> out;
    std::size_t i = 0;
    while (i <= dotted.size()) {
        const auto dot = dotted.find('.', i);
        const auto part = dotted.substr(i, dot == std::string_view::npos ? std::string_view::npos : dot - i);
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size())
            throw Error(ErrorCode::InvalidSelector, "bad path '" + std::string(dotted) + "'");
        out.push_back(v);
        if (dot == std::string_view::npos) break;
        i = dot + 1;
    }
    return out;
}

} // namespace lspace
