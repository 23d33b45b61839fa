#include "lspace/grammar.hpp"

#include <algorithm>
#include <set>

#include "lspace/error.hpp"

namespace lspace {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

void check_word(const Alphabet& a, const Word& w, std::string_view what)
{
    for (Symbol s : w)
        if (!a.contains(s))
            throw Error(ErrorCode::ForeignSymbol, std::string(what) + " contains a symbol outside the alphabet");
}

} // namespace

Grammar::Grammar(Alphabet alphabet, Word axiom, const std::vector<Production>& productions)
    : alphabet_(std::move(alphabet)), axiom_(std::move(axiom)), bodies_(alphabet_.size()), primary_(alphabet_.size())
{
    if (axiom_.empty()) throw Error(ErrorCode::MissingAxiom, "grammar has no axiom");
    check_word(alphabet_, axiom_, "axiom");
    for (const auto& p : productions) {
        if (!alphabet_.contains(p.lhs)) throw Error(ErrorCode::ForeignSymbol, "production lhs outside the alphabet");
        check_word(alphabet_, p.rhs, "production rhs");
        auto& slot = bodies_[index_of(p.lhs)];
        if (!slot.empty())
            throw Error(ErrorCode::DuplicateRule, "symbol '" + alphabet_.name(p.lhs) + "' has more than one production");
        slot.push_back(p.rhs);
        primary_[index_of(p.lhs)] = p;
        order_.push_back(p.lhs);
    }
}

const Production* Grammar::production(Symbol s) const
{
    if (index_of(s) >= primary_.size() || !primary_[index_of(s)]) return nullptr;
    return &*primary_[index_of(s)];
}

const std::vector<Word>& Grammar::alternatives(Symbol s) const
{
    static const std::vector<Word> none;
    if (index_of(s) >= bodies_.size()) return none;
    return bodies_[index_of(s)];
}

bool Grammar::is_erasing(Symbol s) const
{
    return index_of(s) < bodies_.size() && !bodies_[index_of(s)].empty() && bodies_[index_of(s)].front().empty();
}

std::vector<Production> Grammar::productions() const
{
    std::vector<Production> out;
    out.reserve(order_.size());
    for (Symbol s : order_) out.push_back(Production{s, bodies_[index_of(s)].front()});
    return out;
}

std::vector<Symbol> Grammar::stumps() const
{
    std::vector<Symbol> out;
    for (Symbol s : alphabet_.symbols())
        if (is_stump(s)) out.push_back(s);
    return out;
}

void Grammar::add_alternative(Symbol lhs, Word rhs)
{
    if (index_of(lhs) >= bodies_.size() || bodies_[index_of(lhs)].empty())
        throw Error(ErrorCode::InvalidArgument, "alternative for a symbol without a production");
    check_word(alphabet_, rhs, "alternative");
    bodies_[index_of(lhs)].push_back(std::move(rhs));
}

Symbol Grammar::symbol(std::string_view name) const
{
    auto s = alphabet_.find(name);
    if (!s) throw Error(ErrorCode::ForeignSymbol, "symbol '" + std::string(name) + "' is not in the alphabet");
    return *s;
}

bool Grammar::operator==(const Grammar& other) const
{
    if (alphabet_.size() != other.alphabet_.size()) return false;
    auto key = [](const Grammar& g) {
        std::set<std::pair<std::string, std::vector<std::string>>> k;
        for (const auto& p : g.productions()) {
            std::vector<std::string> rhs;
            for (Symbol s : p.rhs) rhs.push_back(g.alphabet_.name(s));
            k.emplace(g.alphabet_.name(p.lhs), std::move(rhs));
        }
        return k;
    };
    auto names = [](const Grammar& g) {
        return std::set<std::string>(g.alphabet_.names().begin(), g.alphabet_.names().end());
    };
    auto axiom = [](const Grammar& g) {
        std::vector<std::string> a;
        for (Symbol s : g.axiom_) a.push_back(g.alphabet_.name(s));
        return a;
    };
    return names(*this) == names(other) && axiom(*this) == axiom(other) && key(*this) == key(other);
}

Grammar parse_grammar(std::string_view text)
{
    Alphabet alphabet;
    std::optional<Word> axiom;
    std::vector<Production> productions;
    std::vector<std::pair<Symbol, Word>> extra;
    std::set<std::uint32_t> declared;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        auto intern = [&](std::string_view tok) {
            try {
                return alphabet.intern(tok);
            } catch (const Error& e) {
                throw Error(ErrorCode::SyntaxError, e.what(), line_no);
            }
        };

        if (line.starts_with("axiom:")) {
            if (axiom) throw Error(ErrorCode::SyntaxError, "second axiom line", line_no);
            Word w;
            for (auto tok : split_ws(line.substr(6))) w.push_back(intern(tok));
            if (w.empty()) throw Error(ErrorCode::MissingAxiom, "empty axiom", line_no);
            axiom = std::move(w);
            continue;
        }

        const auto arrow = line.find("->");
        if (arrow == std::string_view::npos) throw Error(ErrorCode::SyntaxError, "expected 'axiom:' or '<sym> -> ...'", line_no);
        const auto lhs_tokens = split_ws(line.substr(0, arrow));
        if (lhs_tokens.size() != 1)
            throw Error(ErrorCode::SyntaxError, "left-hand side must be exactly one symbol", line_no);
        const Symbol lhs = intern(lhs_tokens.front());
        if (!declared.insert(index_of(lhs)).second)
            throw Error(ErrorCode::DuplicateRule, "symbol '" + std::string(lhs_tokens.front()) + "' has more than one production", line_no);

        std::vector<std::vector<std::string_view>> alts(1);
        for (auto tok : split_ws(line.substr(arrow + 2))) {
            if (tok == "|")
                alts.emplace_back();
            else
                alts.back().push_back(tok);
        }
        std::vector<Word> bodies;
        for (const auto& toks : alts) {
            if (toks.empty()) throw Error(ErrorCode::SyntaxError, "empty right-hand side (write '~' to erase)", line_no);
            Word body;
            if (toks.size() == 1 && toks.front() == kNullToken) {
                bodies.push_back(std::move(body));
                continue;
            }
            for (auto tok : toks) {
                if (tok == kNullToken) throw Error(ErrorCode::SyntaxError, "'~' must be the whole right-hand side", line_no);
                body.push_back(intern(tok));
            }
            bodies.push_back(std::move(body));
        }

        productions.push_back(Production{lhs, bodies.front()});
        for (std::size_t i = 1; i < bodies.size(); ++i) extra.emplace_back(lhs, std::move(bodies[i]));
    }

    if (!axiom) throw Error(ErrorCode::MissingAxiom, "no 'axiom:' line");
    Grammar g(std::move(alphabet), std::move(*axiom), productions);
    for (auto& [lhs, body] : extra) g.add_alternative(lhs, std::move(body));
    return g;
}

std::string to_text(const Grammar& g)
{
    const auto& a = g.alphabet();
    auto join = [&](const Word& w) {
        std::string s;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) s.push_back(' ');
            s += a.name(w[i]);
        }
        return w.empty() ? std::string(kNullToken) : s;
    };
    std::string out = "axiom: " + join(g.axiom()) + "\n";
    for (const auto& p : g.productions()) {
        out += a.name(p.lhs) + " -> ";
        const auto& alts = g.alternatives(p.lhs);
        for (std::size_t i = 0; i < alts.size(); ++i) {
            if (i) out += " | ";
            out += join(alts[i]);
        }
        out += "\n";
    }
    return out;
}

bool Diagnostics::has(std::string_view code) const
{
    return std::any_of(entries.begin(), entries.end(), [&](const Diagnostic& d) { return d.code == code; });
}

Diagnostics validate(const Grammar& g)
{
    Diagnostics d;
    const auto& a = g.alphabet();
    if (g.axiom().empty()) d.entries.push_back({Severity::Error, "MISSING_AXIOM", "grammar has no axiom", std::nullopt});

    std::set<std::uint32_t> lhs, rhs;
    for (const auto& p : g.productions()) {
        lhs.insert(index_of(p.lhs));
        for (const auto& body : g.alternatives(p.lhs))
            for (Symbol s : body) {
                if (!a.contains(s)) {
                    d.entries.push_back({Severity::Error, "FOREIGN_SYMBOL", "rhs symbol outside the alphabet", p.lhs});
                    continue;
                }
                rhs.insert(index_of(s));
            }
    }

    std::vector<std::uint32_t> both;
    std::set_intersection(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(both));
    // Only symbols that actually rewrite (non-empty body) keep a derivation going.
    const bool growing = std::any_of(both.begin(), both.end(), [&](std::uint32_t i) {
        return !g.is_erasing(static_cast<Symbol>(i));
    });
    if (!growing)
        d.entries.push_back({Severity::Warning, "HALTS_GLOBALLY",
                             "no rewriting symbol occurs on both a left- and a right-hand side; the derivation reaches a fixed point",
                             std::nullopt});
    if (lhs.empty())
        d.entries.push_back({Severity::Warning, "ALL_STUMPS", "no symbol has a production", std::nullopt});

    for (Symbol s : a.symbols())
        if (g.alternatives(s).size() > 1)
            d.entries.push_back({Severity::Info, "ALTERNATIVES",
                                 "'" + a.name(s) + "' has alternatives; parallel rewriting uses the first", s});
    d.stumps = g.stumps();
    return d;
}

Word step(const Grammar& g, const Word& s)
{
    const auto& a = g.alphabet();
    std::size_t n = 0;
    for (Symbol x : s) {
        if (!a.contains(x)) throw Error(ErrorCode::ForeignSymbol, "word contains a symbol outside the grammar's alphabet");
        const auto& alts = g.alternatives(x);
        n += alts.empty() ? 1 : alts.front().size();
    }
    Word out;
    out.reserve(n);
    for (Symbol x : s) {
        const auto& alts = g.alternatives(x);
        if (alts.empty())
            out.push_back(x);
        else
            out.insert(out.end(), alts.front().begin(), alts.front().end());
    }
    return out;
}

namespace {

std::size_t next_length(const Grammar& g, const Word& s)
{
    std::size_t n = 0;
    for (Symbol x : s) {
        const auto& alts = g.alternatives(x);
        n += alts.empty() ? 1 : alts.front().size();
    }
    return n;
}

} // namespace

Derivation derive(const Grammar& g, std::size_t n, std::size_t length_cap)
{
    Derivation d{g, {g.axiom()}};
    d.generations.reserve(n + 1);
    for (std::size_t t = 0; t < n; ++t) {
        const std::size_t len = next_length(g, d.generations.back());
        if (len > length_cap)
            throw Error(ErrorCode::LengthCapExceeded, "generation " + std::to_string(t + 1) + " would have " +
                                                          std::to_string(len) + " symbols (cap " +
                                                          std::to_string(length_cap) + ")");
        d.generations.push_back(step(g, d.generations.back()));
    }
    return d;
}

void for_each_symbol(const Grammar& g, std::size_t t, const std::function<void(Symbol)>& visit)
{
    struct Frame {
        const Word* word;
        std::size_t next;
        std::size_t depth; // generations still to apply to the symbols of *word
    };
    // Stumps repeat unchanged, so a one-symbol body stands in for them.
    std::vector<Word> stump_bodies(g.alphabet().size());
    for (Symbol s : g.alphabet().symbols()) stump_bodies[index_of(s)] = {s};

    std::vector<Frame> stack{{&g.axiom(), 0, t}};
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next == f.word->size()) {
            stack.pop_back();
            continue;
        }
        const Symbol s = (*f.word)[f.next++];
        if (f.depth == 0) {
            visit(s);
            continue;
        }
        const auto* p = g.production(s);
        const std::size_t depth = f.depth - 1;
        stack.push_back({p ? &p->rhs : &stump_bodies[index_of(s)], 0, depth});
    }
}

SequentialDerivation derive_sequential(const Grammar& g, std::size_t step_limit, SequentialStrategy strategy)
{
    SequentialDerivation out;
    out.forms.push_back(g.axiom());
    std::vector<std::size_t> used(g.alphabet().size(), 0);
    const auto rules = g.productions();
    std::size_t next_rule = 0;

    auto rewrite_at = [&](Word& w, std::size_t pos) {
        const Symbol s = w[pos];
        const auto& alts = g.alternatives(s);
        const Word& body = alts[used[index_of(s)]++ % alts.size()];
        Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
        next.insert(next.end(), body.begin(), body.end());
        next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(pos) + 1, w.end());
        w = std::move(next);
    };
    auto leftmost = [&](const Word& w, auto pred) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (pred(w[i])) return i;
        return std::nullopt;
    };

    for (;;) {
        const Word& cur = out.forms.back();
        std::optional<std::size_t> pos;
        if (strategy == SequentialStrategy::Leftmost) {
            pos = leftmost(cur, [&](Symbol s) { return !g.is_stump(s); });
        } else {
            for (std::size_t k = 0; k < rules.size() && !pos; ++k) {
                const Symbol lhs = rules[(next_rule + k) % rules.size()].lhs;
                pos = leftmost(cur, [&](Symbol s) { return s == lhs; });
                if (pos) next_rule = (next_rule + k + 1) % rules.size();
            }
        }
        if (!pos) break;
        if (out.forms.size() - 1 >= step_limit) {
            out.truncated = true;
            break;
        }
        Word w = cur;
        rewrite_at(w, *pos);
        out.forms.push_back(std::move(w));
    }
    return out;
}

} // namespace lspace
