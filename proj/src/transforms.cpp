#include "lspace/transforms.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_map>

#include "lspace/error.hpp"

namespace lspace {

namespace {

// Grammar spelled out by symbol names; simplifies edits that change the alphabet.
struct Named {
    std::vector<std::string> alphabet;
    std::vector<std::string> axiom;
    std::vector<std::pair<std::string, std::vector<std::string>>> rules;
};

Named to_named(const Grammar& g)
{
    Named n;
    const auto& a = g.alphabet();
    n.alphabet = a.names();
    for (Symbol s : g.axiom()) n.axiom.push_back(a.name(s));
    for (const auto& p : g.productions()) {
        std::vector<std::string> rhs;
        for (Symbol s : p.rhs) rhs.push_back(a.name(s));
        n.rules.emplace_back(a.name(p.lhs), std::move(rhs));
    }
    return n;
}

Grammar from_named(const Named& n)
{
    Alphabet a;
    for (const auto& name : n.alphabet) a.intern(name);
    auto word = [&](const std::vector<std::string>& names) {
        Word w;
        for (const auto& name : names) {
            const auto s = a.find(name);
            if (!s) throw Error(ErrorCode::ForeignSymbol, "'" + name + "' is not in the alphabet");
            w.push_back(*s);
        }
        return w;
    };
    std::vector<Production> prods;
    for (const auto& [lhs, rhs] : n.rules) prods.push_back({*a.find(lhs), word(rhs)});
    return Grammar(a, word(n.axiom), prods);
}

std::vector<std::string>& rule_body(Named& n, std::string_view lhs)
{
    for (auto& [name, rhs] : n.rules)
        if (name == lhs) return rhs;
    throw Error(ErrorCode::InvalidArgument, "no rule for '" + std::string(lhs) + "'");
}

std::size_t parse_index(std::string_view s)
{
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw Error(ErrorCode::InvalidArgument, "expected a non-negative integer, got '" + std::string(s) + "'");
    return v;
}

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t i = 0;
    for (;;) {
        const auto j = s.find(sep, i);
        out.emplace_back(s.substr(i, j == std::string_view::npos ? std::string_view::npos : j - i));
        if (j == std::string_view::npos) break;
        i = j + 1;
    }
    return out;
}

std::vector<std::string> words_of(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

std::string join(const std::vector<std::string>& names)
{
    std::string s;
    for (const auto& n : names) s += n;
    return s;
}

bool is_binary_names(const std::vector<std::string>& names)
{
    return std::all_of(names.begin(), names.end(), [](const std::string& n) { return n == "0" || n == "1"; });
}

std::optional<Constituency> constituency(const std::vector<std::string>& chunk, ConstituentFamily family, bool allow_mappings)
{
    if (chunk.empty() || !is_binary_names(chunk)) return std::nullopt;
    const auto c = is_constituent(join(chunk), family, allow_mappings);
    if (!c.yes) return std::nullopt;
    return c;
}

Named excise(Named n, std::string_view lhs, std::size_t position, std::size_t length)
{
    auto& rhs = rule_body(n, lhs);
    rhs.erase(rhs.begin() + static_cast<std::ptrdiff_t>(position),
              rhs.begin() + static_cast<std::ptrdiff_t>(position + length));
    return n;
}

Named remove_constant(const Grammar& g, std::string_view name)
{
    const auto s = g.alphabet().find(name);
    if (!s) throw Error(ErrorCode::ForeignSymbol, "'" + std::string(name) + "' is not in the alphabet");
    if (!g.is_null(*s)) throw Error(ErrorCode::NotAStump, "'" + std::string(name) + "' rewrites; only constants can be removed");

    Named n = to_named(g);
    auto drop = [&](std::vector<std::string>& w) { std::erase(w, std::string(name)); };
    std::erase(n.alphabet, std::string(name));
    drop(n.axiom);
    std::erase_if(n.rules, [&](const auto& r) { return r.first == name; });
    for (auto& r : n.rules) drop(r.second);
    return n;
}

} // namespace

// --- expansions -------------------------------------------------------------

ExpansionSpec ExpansionSpec::parse(std::string_view text)
{
    ExpansionSpec spec;
    for (const auto& item : words_of(text)) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
            throw Error(ErrorCode::InvalidArgument, "expansion entries look like 0=3 or 0=4,3, got '" + item + "'");
        std::vector<std::size_t> gens;
        for (const auto& part : split(std::string_view(item).substr(eq + 1), ',')) gens.push_back(parse_index(part));
        if (!spec.generations.emplace(item.substr(0, eq), std::move(gens)).second)
            throw Error(ErrorCode::InvalidArgument, "symbol '" + item.substr(0, eq) + "' listed twice");
    }
    return spec;
}

ExpansionResult expand_generations(const ExpansionSpec& spec)
{
    for (const auto& [sym, gens] : spec.generations) {
        if (sym != "0" && sym != "1") throw Error(ErrorCode::NotBinary, "expansions are defined over {0, 1}");
        if (gens.empty()) throw Error(ErrorCode::IndexOutOfRange, "symbol '" + sym + "' has no generations");
        for (std::size_t i : gens)
            if (i < 1 || i > kMaxExpansionGeneration)
                throw Error(ErrorCode::IndexOutOfRange,
                            "generation " + std::to_string(i) + " outside 1.." + std::to_string(kMaxExpansionGeneration));
    }
    if (!spec.generations.contains("0") || !spec.generations.contains("1"))
        throw Error(ErrorCode::IndexOutOfRange, "both 0 and 1 need generation lists");

    Named n{{"0", "1"}, {"0"}, {}};
    for (const char* sym : {"0", "1"}) {
        std::vector<std::string> rhs;
        for (std::size_t i : spec.generations.at(sym))
            for (char c : fib_word(i)) rhs.emplace_back(1, c);
        n.rules.emplace_back(sym, std::move(rhs));
    }

    ExpansionResult r;
    r.grammar = from_named(n);
    const auto p0 = spec.generations.at("0").front();
    const auto p1 = spec.generations.at("1").front();
    r.skip = (p0 > p1 ? p0 - p1 : p1 - p0) != 1;

    constexpr std::size_t kHorizon = 12;
    const GrowthProfile prof = count_profile(r.grammar, kHorizon);
    r.preserves_fib_counts = true;
    r.counts_are_fibonacci_numbers = true;
    for (Symbol s : prof.symbols) {
        const auto seq = prof.series(s, 1, kHorizon);
        r.preserves_fib_counts = r.preserves_fib_counts && matches_fibonacci(seq).matches;
        r.counts_are_fibonacci_numbers =
            r.counts_are_fibonacci_numbers && std::all_of(seq.begin(), seq.end(), is_fibonacci_number);
    }
    return r;
}

// --- edits ------------------------------------------------------------------

GrammarEdit parse_edit(std::string_view text)
{
    const auto w = words_of(text);
    if (w.empty()) throw Error(ErrorCode::InvalidArgument, "empty edit");
    const auto& kind = w[0];
    if (kind == "add_constant") {
        if (w.size() < 3) throw Error(ErrorCode::InvalidArgument, "usage: add_constant <name> <rule>:<pos> ...");
        AddConstant e{w[1], {}};
        for (std::size_t i = 2; i < w.size(); ++i) {
            const auto colon = w[i].rfind(':');
            if (colon == std::string::npos || colon == 0)
                throw Error(ErrorCode::InvalidArgument, "placements look like <rule>:<pos>, got '" + w[i] + "'");
            e.placements.emplace_back(w[i].substr(0, colon), parse_index(std::string_view(w[i]).substr(colon + 1)));
        }
        return e;
    }
    if (kind == "remove_constant") {
        if (w.size() != 2) throw Error(ErrorCode::InvalidArgument, "usage: remove_constant <name>");
        return RemoveConstant{w[1]};
    }
    if (kind == "permute") {
        if (w.size() != 2) throw Error(ErrorCode::InvalidArgument, "usage: permute a=b,b=a");
        PermuteSymbols e;
        for (const auto& item : split(w[1], ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
                throw Error(ErrorCode::InvalidArgument, "permutation entries look like a=b, got '" + item + "'");
            e.mapping[item.substr(0, eq)] = item.substr(eq + 1);
        }
        return e;
    }
    if (kind == "advance") {
        if (w.size() != 4) throw Error(ErrorCode::InvalidArgument, "usage: advance <rule> <begin> <end>");
        return AdvanceConstituent{w[1], parse_index(w[2]), parse_index(w[3])};
    }
    throw Error(ErrorCode::InvalidArgument, "unknown edit '" + kind + "'");
}

Grammar edit_grammar(const Grammar& g, const GrammarEdit& edit)
{
    const auto& alphabet = g.alphabet();
    if (const auto* e = std::get_if<AddConstant>(&edit)) {
        if (alphabet.find(e->name)) throw Error(ErrorCode::InvalidArgument, "'" + e->name + "' already exists");
        Named n = to_named(g);
        n.alphabet.push_back(e->name);
        for (const auto& [rule, pos] : e->placements) {
            auto& rhs = rule_body(n, rule);
            if (pos > rhs.size()) throw Error(ErrorCode::InvalidSpan, "position " + std::to_string(pos) + " past the end of rule '" + rule + "'");
            rhs.insert(rhs.begin() + static_cast<std::ptrdiff_t>(pos), e->name);
        }
        return from_named(n);
    }
    if (const auto* e = std::get_if<RemoveConstant>(&edit)) return from_named(remove_constant(g, e->name));
    if (const auto* e = std::get_if<PermuteSymbols>(&edit)) {
        std::set<std::string> values;
        for (const auto& [from, to] : e->mapping) {
            if (!alphabet.find(from) || !alphabet.find(to))
                throw Error(ErrorCode::ForeignSymbol, "permutation names a symbol outside the alphabet");
            values.insert(to);
        }
        std::set<std::string> keys;
        for (const auto& kv : e->mapping) keys.insert(kv.first);
        if (keys != values) throw Error(ErrorCode::InvalidArgument, "permutation is not a bijection on the alphabet");

        auto relabel = [&](const std::string& s) {
            const auto it = e->mapping.find(s);
            return it == e->mapping.end() ? s : it->second;
        };
        Named n = to_named(g);
        for (auto& s : n.axiom) s = relabel(s);
        for (auto& [lhs, rhs] : n.rules) {
            lhs = relabel(lhs);
            for (auto& s : rhs) s = relabel(s);
        }
        return from_named(n);
    }
    const auto& e = std::get<AdvanceConstituent>(edit);
    const Symbol lhs = g.symbol(e.rule);
    const auto* p = g.production(lhs);
    if (!p) throw Error(ErrorCode::InvalidArgument, "'" + e.rule + "' has no rule");
    if (e.begin >= e.end || e.end > p->rhs.size())
        throw Error(ErrorCode::InvalidSpan, "span [" + std::to_string(e.begin) + ", " + std::to_string(e.end) +
                                                ") outside rule '" + e.rule + "'");
    const Word span(p->rhs.begin() + static_cast<std::ptrdiff_t>(e.begin), p->rhs.begin() + static_cast<std::ptrdiff_t>(e.end));
    const Word image = step(g, span);
    Named n = to_named(g);
    auto& rhs = rule_body(n, e.rule);
    std::vector<std::string> replacement;
    for (Symbol s : image) replacement.push_back(alphabet.name(s));
    rhs.erase(rhs.begin() + static_cast<std::ptrdiff_t>(e.begin), rhs.begin() + static_cast<std::ptrdiff_t>(e.end));
    rhs.insert(rhs.begin() + static_cast<std::ptrdiff_t>(e.begin), replacement.begin(), replacement.end());
    return from_named(n);
}

// --- pruning and reduction ---------------------------------------------------

Grammar prune_rule(const Grammar& g, std::string_view target, const Word& chunk, std::size_t position, bool allow_mappings)
{
    const Symbol lhs = g.symbol(target);
    const auto* p = g.production(lhs);
    if (!p) throw Error(ErrorCode::NotPresent, "'" + std::string(target) + "' has no rule to prune");
    std::vector<std::string> names;
    for (Symbol s : chunk) names.push_back(g.alphabet().name(s));
    if (!constituency(names, ConstituentFamily::Fib, allow_mappings))
        throw Error(ErrorCode::NotConstituent, "'" + render(g.alphabet(), chunk) + "' is not a Fib constituent");
    if (position + chunk.size() > p->rhs.size() ||
        !std::equal(chunk.begin(), chunk.end(), p->rhs.begin() + static_cast<std::ptrdiff_t>(position)))
        throw Error(ErrorCode::NotPresent, "chunk does not occur in rule '" + std::string(target) + "' at position " +
                                               std::to_string(position));
    return from_named(excise(to_named(g), target, position, chunk.size()));
}

std::string_view to_string(MinimalTarget t) noexcept
{
    return t == MinimalTarget::Fib ? "fib" : "xor";
}

ReductionResult reduce_to_minimal(const Grammar& g, MinimalTarget target, std::size_t search_bound, bool allow_mappings)
{
    ReductionResult r;
    const Grammar goal = target == MinimalTarget::Fib ? minimal_fib_grammar() : minimal_xor_grammar();
    const auto family = target == MinimalTarget::Fib ? ConstituentFamily::Fib : ConstituentFamily::ThueMorse;
    std::vector<ReductionStep> steps;

    // Constants go first: they never contribute to the minimal grammars.
    Grammar cur = g;
    for (const auto& name : g.alphabet().names()) {
        if (name == "0" || name == "1") continue;
        if (!cur.is_null(cur.symbol(name))) {
            r.reason = "'" + name + "' rewrites and is not a binary symbol";
            r.exhausted = true;
            return r;
        }
        cur = from_named(remove_constant(cur, name));
        steps.push_back({ReductionStep::Kind::RemoveConstant, name, "", 0, 0, MappingExpr::Id});
    }
    const Named start = to_named(cur);
    if (start.axiom != std::vector<std::string>{"0"}) {
        r.reason = "axiom is not 0";
        r.exhausted = true;
        return r;
    }

    // Rules prune independently, so each one gets its own breadth-first search.
    Named reached = start;
    for (const auto& [lhs, goal_body] : to_named(goal).rules) {
        std::vector<std::string>* body = nullptr;
        for (auto& rule : reached.rules)
            if (rule.first == lhs) body = &rule.second;
        if (!body) {
            r.reason = "'" + lhs + "' has no rule";
            r.exhausted = true;
            return r;
        }

        struct Edge {
            std::string parent;
            ReductionStep step;
        };
        const std::string from = join(*body);
        const std::string to = join(goal_body);
        std::unordered_map<std::string, Edge> seen{{from, {"", {}}}};
        std::deque<std::string> queue{from};
        bool found = from == to;
        while (!queue.empty() && !found) {
            if (++r.visited > search_bound) {
                r.reason = "search bound " + std::to_string(search_bound) + " reached at rule '" + lhs + "'";
                return r;
            }
            const std::string s = queue.front();
            queue.pop_front();
            for (std::size_t pos = 0; pos < s.size() && !found; ++pos)
                for (std::size_t len = 1; pos + len <= s.size() && len < s.size() && !found; ++len) {
                    const std::string chunk = s.substr(pos, len);
                    std::vector<std::string> names;
                    for (char c : chunk) names.emplace_back(1, c);
                    const auto c = constituency(names, family, allow_mappings);
                    if (!c) continue;
                    std::string next = s.substr(0, pos) + s.substr(pos + len);
                    if (seen.contains(next)) continue;
                    seen.emplace(next, Edge{s, {ReductionStep::Kind::Prune, lhs, chunk, pos, c->generation, c->mapping}});
                    if (next == to)
                        found = true;
                    else
                        queue.push_back(std::move(next));
                }
        }
        if (!found) {
            r.exhausted = true;
            r.reason = "rule '" + lhs + "' cannot be pruned to " + to;
            return r;
        }
        std::vector<ReductionStep> path;
        for (std::string s = to; s != from; s = seen.at(s).parent) path.push_back(seen.at(s).step);
        steps.insert(steps.end(), path.rbegin(), path.rend());
        body->clear();
        for (char c : to) body->emplace_back(1, c);
    }

    const Grammar final_grammar = from_named(reached);
    if (!(final_grammar == goal)) {
        r.exhausted = true;
        r.reason = "reduced grammar has extra rules";
        return r;
    }
    r.success = true;
    r.proof = ReductionProof{g, std::move(steps), final_grammar};
    return r;
}

Grammar replay(const Grammar& source, const std::vector<ReductionStep>& steps)
{
    Named n = to_named(source);
    for (const auto& s : steps) {
        if (s.kind == ReductionStep::Kind::RemoveConstant) {
            n = remove_constant(from_named(n), s.symbol);
            continue;
        }
        std::vector<std::string> chunk;
        for (char c : s.chunk) chunk.emplace_back(1, c);
        const std::string fib = s.generation <= 40 ? apply_expr(s.mapping, fib_word(s.generation)) : "";
        const std::string tm = s.generation <= 30 ? apply_expr(s.mapping, thue_morse_word(s.generation)) : "";
        if (s.chunk != fib && s.chunk != tm)
            throw Error(ErrorCode::NotConstituent, "step chunk '" + s.chunk + "' is not the recorded constituent");
        const auto& rhs = rule_body(n, s.symbol);
        if (s.position + chunk.size() > rhs.size() ||
            !std::equal(chunk.begin(), chunk.end(), rhs.begin() + static_cast<std::ptrdiff_t>(s.position)))
            throw Error(ErrorCode::NotPresent, "step chunk '" + s.chunk + "' not found in rule '" + s.symbol + "'");
        n = excise(std::move(n), s.symbol, s.position, chunk.size());
    }
    return from_named(n);
}

} // namespace lspace
