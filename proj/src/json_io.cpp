#include "lspace/json_io.hpp"

#include <functional>

namespace lspace {

namespace {

Json word_json(const Alphabet& a, const Word& w)
{
    return render(a, w);
}

Json optional_symbol(const Alphabet& a, const std::optional<Symbol>& s)
{
    return s ? Json(a.name(*s)) : Json(nullptr);
}

std::string_view severity_name(Severity s)
{
    switch (s) {
    case Severity::Info: return "info";
    case Severity::Warning: return "warning";
    case Severity::Error: return "error";
    }
    return "?";
}

} // namespace

std::string rational_text(const Rational& r)
{
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Json to_json(const Grammar& g)
{
    const auto& a = g.alphabet();
    Json rules = Json::array();
    for (const auto& p : g.productions()) {
        Json alts = Json::array();
        for (const auto& body : g.alternatives(p.lhs)) alts.push_back(body.empty() ? std::string(kNullToken) : render(a, body));
        rules.push_back({{"lhs", a.name(p.lhs)}, {"rhs", alts.front()}, {"alternatives", alts}});
    }
    Json stumps = Json::array();
    for (Symbol s : g.stumps()) stumps.push_back(a.name(s));
    return {{"alphabet", a.names()}, {"axiom", word_json(a, g.axiom())}, {"rules", rules}, {"stumps", stumps}};
}

Json to_json(const Diagnostics& d, const Alphabet& a)
{
    Json entries = Json::array();
    for (const auto& e : d.entries)
        entries.push_back({{"severity", severity_name(e.severity)},
                           {"code", e.code},
                           {"message", e.message},
                           {"symbol", optional_symbol(a, e.location)}});
    Json stumps = Json::array();
    for (Symbol s : d.stumps) stumps.push_back(a.name(s));
    return {{"diagnostics", entries}, {"stumps", stumps}};
}

Json to_json(const Derivation& d)
{
    Json gens = Json::array();
    for (std::size_t t = 0; t < d.size(); ++t)
        gens.push_back({{"t", t}, {"length", d[t].size()}, {"string", d.render(t)}});
    return {{"generations", gens}};
}

Json to_json(const SequentialDerivation& d, const Alphabet& a)
{
    Json forms = Json::array();
    for (const auto& w : d.forms) forms.push_back(word_json(a, w));
    return {{"forms", forms}, {"truncated", d.truncated}};
}

Json to_json(const DerivationTree& t)
{
    std::function<Json(DerivationTree::NodeId)> node = [&](DerivationTree::NodeId id) {
        const auto& n = t.node(id);
        Json children = Json::array();
        for (auto c : n.children) children.push_back(node(c));
        return Json{{"label", t.label_text(id)}, {"depth", n.depth}, {"erased", n.erased}, {"atom", n.atom},
                    {"children", children}};
    };
    Json roots = Json::array();
    for (auto r : t.roots()) roots.push_back(node(r));
    return {{"bracketed", t.to_string()}, {"size", t.size()}, {"roots", roots}};
}

Json to_json(const ClassificationReport& r, const Alphabet& a)
{
    Json remainder = r.remainder ? Json(render(a, *r.remainder)) : Json(nullptr);
    Json fib = r.remainder_is_fib_constituent ? Json(*r.remainder_is_fib_constituent) : Json(nullptr);
    return {{"symmetric", r.symmetric},
            {"asymmetry", to_string(r.asymmetry)},
            {"strong_term", optional_symbol(a, r.strong_term)},
            {"weak_term", optional_symbol(a, r.weak_term)},
            {"remainder", remainder},
            {"remainder_is_fib_constituent", fib},
            {"exhaustive", r.exhaustive},
            {"mode",
             {{"index_counts_stumps", r.mode.index_counts_stumps},
              {"containment_includes_stumps", r.mode.containment_includes_stumps}}}};
}

Json to_json(const RuleFormat& f)
{
    return {{"axiom_rule", to_string(f.axiom_rule)}, {"nonaxiom_rule", to_string(f.nonaxiom_rule)}, {"family", to_string(f.family)}};
}

Json to_json(const TilingConflict& t, const std::vector<RewriteRule>& rules, const Alphabet& a)
{
    Json matches = Json::array();
    for (const auto& m : t.matches)
        matches.push_back({{"rule", m.rule},
                           {"lhs", render(a, rules.at(m.rule).lhs)},
                           {"start", m.start},
                           {"length", m.length}});
    Json conflicts = Json::array();
    for (const auto& [i, j] : t.conflicts) conflicts.push_back(Json::array({i, j}));
    return {{"sample", word_json(a, t.sample)},
            {"verdict", to_string(t.verdict)},
            {"matches", matches},
            {"conflicts", conflicts},
            {"distinct_tilings", t.distinct_tilings},
            {"tilings_truncated", t.tilings_truncated}};
}

Json to_json(const GrowthProfile& p, const Alphabet& a)
{
    Json names = Json::array();
    for (Symbol s : p.symbols) names.push_back(a.name(s));
    Json rows = Json::array();
    for (std::size_t t = 0; t < p.counts.size(); ++t) {
        Json counts = Json::object();
        for (std::size_t k = 0; k < p.symbols.size(); ++k) counts[a.name(p.symbols[k])] = p.counts[t][k];
        rows.push_back({{"t", t}, {"total", p.totals[t]}, {"counts", counts}});
    }
    return {{"symbols", names}, {"generations", rows}};
}

Json to_json(const LegalityReport& r)
{
    Json v = Json::array();
    for (const auto& x : r.violations) v.push_back({{"ngram", x.ngram}, {"position", x.position}});
    return {{"legal", r.legal}, {"violations", v}};
}

Json to_json(const Constituency& c)
{
    if (!c.yes) return {{"constituent", false}, {"generation", nullptr}, {"mapping", nullptr}};
    return {{"constituent", true}, {"generation", c.generation}, {"mapping", to_string(c.mapping)}};
}

Json to_json(const RatioComparison& c)
{
    auto profile = [](const RatioProfile& p) {
        Json out = Json::array();
        for (const auto& r : p.ratios) out.push_back(r ? Json(rational_text(*r)) : Json(nullptr));
        return out;
    };
    return {{"equal", c.equal}, {"first", profile(c.first)}, {"second", profile(c.second)}};
}

Json to_json(const Decomposition& d)
{
    Json segs = Json::array();
    for (const auto& s : d.segments) segs.push_back({{"generation", s.generation}, {"mapping", to_string(s.mapping)}});
    return {{"target", d.target}, {"kind", d.kind == DecompositionKind::Perfect ? "perfect" : "partial"}, {"segments", segs}};
}

Json to_json(const RepetitionStats& r, const Word& s, const Alphabet& a)
{
    const Word factor(s.begin() + static_cast<std::ptrdiff_t>(std::min(r.position, s.size())),
                      s.begin() + static_cast<std::ptrdiff_t>(std::min(r.position + r.length, s.size())));
    return {{"length", s.size()},
            {"max_exponent", rational_text(r.max_exponent)},
            {"has_cube", r.has_cube},
            {"witness", {{"factor", render(a, factor)}, {"position", r.position}, {"period", r.period}}}};
}

Json to_json(const ClosureResult& r, ClosureOp op)
{
    return {{"op", to_string(op)},
            {"holds_at_bound", r.holds_at_bound},
            {"counterexample", r.counterexample ? Json(*r.counterexample) : Json(nullptr)},
            {"tested", r.tested}};
}

Json to_json(const ExpansionResult& r)
{
    return {{"grammar", to_json(r.grammar)},
            {"text", to_text(r.grammar)},
            {"skip", r.skip},
            {"preserves_fib_counts", r.preserves_fib_counts},
            {"counts_are_fibonacci_numbers", r.counts_are_fibonacci_numbers}};
}

Json to_json(const ReductionResult& r)
{
    Json out{{"success", r.success}, {"visited", r.visited}, {"exhausted", r.exhausted}, {"reason", r.reason}};
    if (!r.proof) {
        out["proof"] = nullptr;
        return out;
    }
    Json steps = Json::array();
    for (const auto& s : r.proof->steps) {
        if (s.kind == ReductionStep::Kind::RemoveConstant) {
            steps.push_back({{"kind", "remove_constant"}, {"symbol", s.symbol}});
            continue;
        }
        steps.push_back({{"kind", "prune"},
                         {"rule", s.symbol},
                         {"chunk", s.chunk},
                         {"position", s.position},
                         {"generation", s.generation},
                         {"mapping", to_string(s.mapping)}});
    }
    out["proof"] = {{"steps", steps}, {"final_grammar", to_text(r.proof->final_grammar)}};
    return out;
}

Json to_json(const GoldenReport& r)
{
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
    return {{"passed", r.passed()}, {"checks", checks}};
}

} // namespace lspace
