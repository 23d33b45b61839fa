#include "lspace/classifier.hpp"

#include <algorithm>
#include <set>

#include "lspace/analysis.hpp"
#include "lspace/error.hpp"

namespace lspace {

namespace {

Word strip_nulls(const Grammar& g, const Word& w)
{
    Word out;
    for (Symbol s : w)
        if (!g.is_null(s)) out.push_back(s);
    return out;
}

std::optional<std::size_t> find_factor(const Word& haystack, const Word& needle)
{
    if (needle.size() > haystack.size()) return std::nullopt;
    auto it = std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end());
    if (it == haystack.end() && !needle.empty()) return std::nullopt;
    return static_cast<std::size_t>(it - haystack.begin());
}

} // namespace

std::size_t rule_index(const Grammar& g, const Production& p, const CountingMode& mode)
{
    if (mode.index_counts_stumps) return p.rhs.size();
    return static_cast<std::size_t>(std::count_if(p.rhs.begin(), p.rhs.end(), [&](Symbol s) { return !g.is_null(s); }));
}

std::string_view to_string(Asymmetry a) noexcept
{
    switch (a) {
    case Asymmetry::None: return "none";
    case Asymmetry::Weak: return "weak";
    case Asymmetry::Strong: return "strong";
    }
    return "?";
}

ClassificationReport classify(const Grammar& g, const CountingMode& mode)
{
    ClassificationReport r;
    r.mode = mode;
    const auto prods = g.productions();
    const auto& alphabet = g.alphabet();

    std::vector<std::size_t> idx;
    for (const auto& p : prods) idx.push_back(rule_index(g, p, mode));

    const auto symbols = alphabet.symbols();
    const bool all_rewrite = std::all_of(symbols.begin(), symbols.end(), [&](Symbol s) {
        const auto* p = g.production(s);
        return p && !p->rhs.empty();
    });
    const bool equal_indices = !idx.empty() && std::all_of(idx.begin(), idx.end(), [&](std::size_t i) { return i == idx.front(); });
    r.symmetric = all_rewrite && equal_indices;

    // Exhaustive: equal indices and no repeated symbol inside any rule body.
    r.exhaustive = equal_indices && std::all_of(prods.begin(), prods.end(), [](const Production& p) {
        std::set<std::uint32_t> seen;
        for (Symbol s : p.rhs)
            if (!seen.insert(index_of(s)).second) return false;
        return true;
    });

    // Asymmetry is judged over the productions that rewrite to something.
    struct Ranked {
        Production p;
        std::size_t index;
    };
    std::vector<Ranked> ranked;
    for (std::size_t k = 0; k < prods.size(); ++k)
        if (!prods[k].rhs.empty()) ranked.push_back({prods[k], idx[k]});
    std::stable_sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) { return a.index < b.index; });

    bool weak = !r.symmetric && ranked.size() >= 2 && ranked.front().index > 0;
    for (std::size_t k = 1; weak && k < ranked.size(); ++k)
        if (ranked[k].index == ranked[k - 1].index) weak = false;
    if (!weak) return r;

    r.asymmetry = Asymmetry::Weak;
    r.weak_term = ranked.front().p.lhs;
    r.strong_term = ranked.back().p.lhs;

    auto body = [&](const Production& p) { return mode.containment_includes_stumps ? p.rhs : strip_nulls(g, p.rhs); };

    bool strong = true;
    for (std::size_t i = 0; strong && i < ranked.size(); ++i)
        for (std::size_t j = i + 1; strong && j < ranked.size(); ++j) {
            const Word small = body(ranked[i].p);
            const Word large = body(ranked[j].p);
            strong = large.size() > small.size() && find_factor(large, small).has_value();
        }
    if (!strong) return r;

    r.asymmetry = Asymmetry::Strong;
    const Word small = body(ranked.front().p);
    const Word large = body(ranked.back().p);
    const std::size_t at = *find_factor(large, small);
    Word rem(large.begin(), large.begin() + static_cast<std::ptrdiff_t>(at));
    rem.insert(rem.end(), large.begin() + static_cast<std::ptrdiff_t>(at + small.size()), large.end());
    r.remainder = rem;

    const std::string text = render(alphabet, rem);
    if (std::all_of(rem.begin(), rem.end(), [&](Symbol s) { return alphabet.name(s) == "0" || alphabet.name(s) == "1"; }))
        r.remainder_is_fib_constituent = is_fib_constituent(text, true).yes;
    return r;
}

std::string_view to_string(AxiomSchema s) noexcept
{
    switch (s) {
    case AxiomSchema::I: return "i";
    case AxiomSchema::II: return "ii";
    case AxiomSchema::III: return "iii";
    }
    return "?";
}

std::string_view to_string(NonAxiomSchema s) noexcept
{
    switch (s) {
    case NonAxiomSchema::IV: return "iv";
    case NonAxiomSchema::V: return "v";
    case NonAxiomSchema::VI: return "vi";
    }
    return "?";
}

std::string_view to_string(Family f) noexcept
{
    switch (f) {
    case Family::Fib: return "Fib";
    case Family::XOR: return "XOR";
    case Family::Feigenbaum: return "Feigenbaum";
    case Family::TrivialAlternation: return "trivial-alternation";
    case Family::Degenerate: return "degenerate";
    case Family::FibMappable: return "fib-mappable";
    }
    return "?";
}

Family family_of(AxiomSchema a, NonAxiomSchema n) noexcept
{
    using A = AxiomSchema;
    using N = NonAxiomSchema;
    if (n == N::V) {
        if (a == A::I) return Family::Fib;
        if (a == A::II) return Family::XOR;
        return Family::Feigenbaum;
    }
    if (n == N::IV) {
        if (a == A::I) return Family::TrivialAlternation;
        if (a == A::II) return Family::FibMappable;
    }
    return Family::Degenerate;
}

RuleFormat rule_format(const Grammar& g)
{
    const auto& alphabet = g.alphabet();
    if (alphabet.size() != 2) throw Error(ErrorCode::NotBinaryMinimal, "rule formats are defined for two-symbol alphabets");
    if (g.axiom().size() != 1) throw Error(ErrorCode::NotBinaryMinimal, "rule formats need a one-symbol axiom");
    const Symbol axiom = g.axiom().front();
    const Symbol other = static_cast<Symbol>(1 - index_of(axiom));

    auto counts = [&](Symbol lhs) {
        const auto* p = g.production(lhs);
        if (!p || p->rhs.empty() || p->rhs.size() > 2)
            throw Error(ErrorCode::NotBinaryMinimal, "'" + alphabet.name(lhs) + "' must rewrite to one or two symbols");
        const auto a = static_cast<std::size_t>(std::count(p->rhs.begin(), p->rhs.end(), axiom));
        return std::pair{a, p->rhs.size() - a};
    };

    const auto [aa, ab] = counts(axiom);
    AxiomSchema as;
    if (aa == 0 && ab == 1)
        as = AxiomSchema::I;
    else if (aa == 1 && ab == 1)
        as = AxiomSchema::II;
    else if (aa == 0 && ab == 2)
        as = AxiomSchema::III;
    else
        throw Error(ErrorCode::NotBinaryMinimal, "axiom rule matches none of the schemas (i)-(iii)");

    const auto [na, nb] = counts(other);
    NonAxiomSchema ns;
    if (na == 1 && nb == 0)
        ns = NonAxiomSchema::IV;
    else if (na == 1 && nb == 1)
        ns = NonAxiomSchema::V;
    else if (na == 0 && nb == 2)
        ns = NonAxiomSchema::VI;
    else
        throw Error(ErrorCode::NotBinaryMinimal, "non-axiom rule matches none of the schemas (iv)-(vi)");

    return RuleFormat{as, ns, family_of(as, ns)};
}

} // namespace lspace
