#include "lspace/golden.hpp"

#include <algorithm>
#include <map>

#include "lspace/analysis.hpp"
#include "lspace/automata.hpp"
#include "lspace/classifier.hpp"
#include "lspace/error.hpp"
#include "lspace/transforms.hpp"

namespace lspace {

namespace {

const std::map<std::string_view, std::string_view>& library()
{
    static const std::map<std::string_view, std::string_view> grammars{
        {"fib", "axiom: 0\n0 -> 1\n1 -> 0 1\n"},
        {"fib-stump", "axiom: 0\n0 -> 1 ∅\n1 -> 0 1 ∅\n"},
        {"xor", "axiom: 0\n0 -> 0 1\n1 -> 1 0\n"},
        {"xor-dagger", "axiom: 0\n0 -> 1 0\n1 -> 0 1\n"},
        {"efib1", "axiom: 0\n0 -> 1 ε\n1 -> 0 1\nε -> ~\n"},
        {"efib2", "axiom: 0\n0 -> 1 ε\n1 -> 0 1 ε\nε -> ~\n"},
        {"g-i", "axiom: 0\n0 -> 1 0\n1 -> 1 0 1\n"},
        {"eq9", "axiom: a\na -> a b\nb -> a b b a b\n"},
        {"eq10", "axiom: 0\n0 -> 1 0 1\n1 -> 1 0 1 0 1\n"},
        {"eq11", "axiom: 0\n0 -> 0 1\n1 -> 0 1 0 1 0\n"},
        {"eq12a", "axiom: 0\n0 -> 1 0 1\n1 -> 0 1 1 0 1\n"},
        {"eq12b", "axiom: 0\n0 -> 1 0 1\n1 -> 1 0 1 0 1 1 0 1\n"},
        {"eq13", "axiom: 0\n0 -> 1 1 0 1\n1 -> 1 0 1 0 1\n"},
        {"eq14", "axiom: 0\n0 -> 0 1 1 0 1 1 0 1\n1 -> 1 0 1 0 1 1 0 1 0 1 1 0 1\n"},
        {"eq19", "axiom: 0\n0 -> 0 1\n1 -> 1 0 1\n"},
        {"eq20", "axiom: 0\n0 -> 0 1 0 1\n1 -> 1 0 1 1 0 1\n"},
        {"fib-mappable", "axiom: 0\n0 -> 0 1\n1 -> 0\n"},
        {"chomsky-2",
         "axiom: Sentence\nSentence -> NP VP\nNP -> T N\nVP -> Verb NP\nT -> the\nN -> man | ball\nVerb -> hit | took\n"},
    };
    return grammars;
}

// Printed derivation tables, generation 0 first.
const std::vector<std::string> kFibRows{
    "0", "1", "01", "101", "01101", "10101101", "0110110101101", "1010110101101101101",
    "0110110101101101101101101101101"};
const std::vector<std::string> kXorRows{
    "0", "01", "0110", "01101001", "0110100110010110", "01101001100101101001101001",
    "0110100110010110100101100110100110010110"};
const std::vector<std::string> kXorDaggerRows{
    "0", "10", "0110", "10010110", "0110100110010110", "1001011001101001011010011010110",
    "0110100110010110100101100110100110010110"};
const std::vector<std::string> kEFib1Rows{
    "0", "1ε", "01", "1ε01", "011ε01", "1ε01011ε01", "011ε011ε01011ε01", "1ε01011ε01011ε011ε01011ε01",
    "011ε011ε01011ε011ε01011ε01011ε011ε01011ε01"};
const std::vector<std::string> kEFib2Rows{
    "0", "1ε", "01ε", "1ε01ε", "01ε1ε01ε", "1ε01ε01ε1ε01ε", "01ε1ε01ε1ε01ε01ε1ε01ε",
    "1ε01ε01ε1ε01ε01ε1ε01ε1ε01ε01ε1ε01ε",
    "01ε1ε01ε1ε01ε01ε1ε01ε01ε1ε01ε01ε1ε01ε01ε1ε01ε01ε1ε01ε"};
const std::vector<Count> kPrintedOnes{1, 1, 2, 3, 5, 8, 13, 21};

class Collector {
public:
    void add(std::string name, bool ok, std::string detail = {})
    {
        report.checks.push_back({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)});
    }
    void skip(std::string name, std::string detail)
    {
        report.checks.push_back({std::move(name), CheckStatus::Skip, std::move(detail)});
    }
    // Runs `body`, turning a thrown error into a failed check.
    template <class F>
    void guard(const std::string& name, F&& body)
    {
        try {
            body();
        } catch (const std::exception& e) {
            add(name, false, e.what());
        }
    }

    GoldenReport report;
};

std::size_t code_points(const std::string& s)
{
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

// Streams generation t through a three-symbol window looking for 00 and 111.
bool generation_legal(const Grammar& g, std::size_t t)
{
    const Symbol zero = g.symbol("0");
    std::size_t zeros = 0, ones = 0;
    bool legal = true;
    for_each_symbol(g, t, [&](Symbol s) {
        const bool z = s == zero;
        zeros = z ? zeros + 1 : 0;
        ones = z ? 0 : ones + 1;
        legal = legal && zeros < 2 && ones < 3;
    });
    return legal;
}

void table(Collector& c, const std::string& name, const std::vector<std::string>& rows)
{
    c.guard(name, [&] {
        const Grammar g = parse_grammar(reference_grammar(name));
        const Derivation d = derive(g, rows.size() - 1);
        const GrowthProfile lengths = count_profile(g, rows.size() - 1);
        for (std::size_t t = 0; t < rows.size(); ++t) {
            const std::string label = name + " g" + std::to_string(t);
            if (code_points(rows[t]) != lengths.totals[t]) {
                c.skip(label, "printed row has " + std::to_string(code_points(rows[t])) + " symbols, length law gives " +
                                  std::to_string(lengths.totals[t]));
                continue;
            }
            const std::string got = d.render(t);
            c.add(label, got == rows[t], got == rows[t] ? "" : "derived " + got);
        }
    });
}

void ones_column(Collector& c, const std::string& name)
{
    c.guard(name + " count column", [&] {
        const Grammar g = parse_grammar(reference_grammar(name));
        const auto series = count_profile(g, 8).series(g.symbol("1"), 1, 8);
        c.add(name + " count column", series == kPrintedOnes);
    });
}

} // namespace

std::string_view to_string(CheckStatus s) noexcept
{
    switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
    }
    return "?";
}

bool GoldenReport::passed() const
{
    return std::none_of(checks.begin(), checks.end(), [](const GoldenCheck& c) { return c.status == CheckStatus::Fail; });
}

std::string_view reference_grammar(std::string_view name)
{
    const auto& lib = library();
    const auto it = lib.find(name);
    if (it == lib.end()) throw Error(ErrorCode::InvalidArgument, "no reference grammar named '" + std::string(name) + "'");
    return it->second;
}

std::vector<std::string_view> reference_grammar_names()
{
    std::vector<std::string_view> out;
    for (const auto& kv : library()) out.push_back(kv.first);
    return out;
}

GoldenReport reproduce()
{
    Collector c;
    auto load = [](std::string_view name) { return parse_grammar(reference_grammar(name)); };

    table(c, "fib", kFibRows);
    table(c, "xor", kXorRows);
    table(c, "xor-dagger", kXorDaggerRows);
    table(c, "efib1", kEFib1Rows);
    table(c, "efib2", kEFib2Rows);
    ones_column(c, "fib");
    ones_column(c, "efib1");
    ones_column(c, "efib2");

    c.guard("mapping example", [&] {
        c.add("mapping example", mirror(std::string_view("10110")) == "01101" && negative("10110") == "01001" &&
                                     mirror(std::string_view("01101")) == "10110" && negative("01001") == "10110");
    });

    const std::vector<std::pair<std::string, std::string>> labels{
        {"xor", "symmetric"}, {"xor-dagger", "symmetric"}, {"fib", "strong"}, {"g-i", "strong"},
        {"eq9", "strong"},    {"efib1", "weak"},           {"efib2", "strong"}};
    for (const auto& [name, want] : labels)
        c.guard("classify " + name, [&] {
            const auto r = classify(load(name));
            const std::string got = r.symmetric ? "symmetric" : std::string(to_string(r.asymmetry));
            c.add("classify " + name, got == want, "got " + got);
        });

    const std::vector<std::pair<std::string, Family>> formats{
        {"fib", Family::Fib}, {"xor", Family::XOR}, {"fib-mappable", Family::FibMappable}};
    for (const auto& [name, want] : formats)
        c.guard("rule format " + name, [&] {
            const auto f = rule_format(load(name)).family;
            c.add("rule format " + name, f == want, "got " + std::string(to_string(f)));
        });

    c.guard("fib-mappable images", [&] {
        const Derivation d = derive(load("fib-mappable"), 8);
        bool ok = true;
        for (std::size_t t = 1; t <= 8; ++t) ok = ok && is_fib_constituent(d.render(t), true).yes;
        c.add("fib-mappable images", ok);
    });

    c.guard("expansion eq12a", [&] {
        const auto r = expand_generations(ExpansionSpec::parse("0=3 1=4"));
        c.add("expansion eq12a", r.grammar == load("eq12a") && !r.skip);
    });
    c.guard("expansion eq12b", [&] {
        const auto r = expand_generations(ExpansionSpec::parse("0=3 1=5"));
        c.add("expansion eq12b", r.grammar == load("eq12b") && r.skip);
    });
    c.guard("expansion eq14", [&] {
        const auto r = expand_generations(ExpansionSpec::parse("0=4,3 1=5,4"));
        c.add("expansion eq14", r.grammar == load("eq14"));
    });
    for (const char* name : {"eq12a", "eq12b"})
        c.guard(std::string("legality ") + name, [&] {
            const Grammar g = load(name);
            bool ok = true;
            for (std::size_t t = 0; t <= 10; ++t) ok = ok && generation_legal(g, t);
            c.add(std::string("legality ") + name, ok);
        });
    c.guard("illegal eq11", [&] {
        const Derivation d = derive(load("eq11"), 4);
        bool bad = false;
        for (std::size_t t = 0; t < d.size(); ++t)
            for (const auto& v : fib_legal(d.render(t)).violations) bad = bad || v.ngram == "00";
        c.add("illegal eq11", bad);
    });

    c.guard("ratios eq19/eq20", [&] {
        c.add("ratios eq19/eq20", ratio_profiles_equal(load("eq19"), load("eq20"), "0", "1", 6).equal);
    });

    for (const char* name : {"eq13", "eq12a"})
        c.guard(std::string("reduce ") + name, [&] {
            const Grammar g = load(name);
            const auto r = reduce_to_minimal(g, MinimalTarget::Fib);
            c.add(std::string("reduce ") + name,
                  r.success && replay(g, r.proof->steps) == r.proof->final_grammar &&
                      r.proof->final_grammar == minimal_fib_grammar(),
                  r.reason);
        });
    c.guard("reduce xor to fib fails", [&] {
        const auto r = reduce_to_minimal(load("xor"), MinimalTarget::Fib);
        c.add("reduce xor to fib fails", !r.success, r.reason);
    });

    c.guard("frustration eq15", [&] {
        Alphabet a;
        const auto rules = parse_rewrite_rules(a, "01 -> 101\n10 -> 0101\n");
        const auto t = detect_frustration(rules, intern_word(a, "0101"));
        c.add("frustration eq15", t.conflicts.size() >= 2 && t.distinct_tilings >= 2);
    });

    c.guard("majority table", [&] {
        const auto rt = RuleTable::majority();
        const std::string printed = "00010111";
        bool ok = true;
        for (int k = 0; k < 8; ++k) ok = ok && rt(k & 4, k & 2, k & 1) == (printed[static_cast<std::size_t>(k)] == '1');
        ok = ok && ca_step(rt, CAState::parse("01101")).to_string() == "11110";
        c.add("majority table", ok);
    });

    c.guard("sequential chomsky-2", [&] {
        const Grammar g = load("chomsky-2");
        const auto seq = derive_sequential(g, 20, SequentialStrategy::RuleCycle);
        const std::vector<std::string> want{"Sentence",
                                            "NP VP",
                                            "T N VP",
                                            "T N Verb NP",
                                            "the N Verb NP",
                                            "the man Verb NP",
                                            "the man hit NP",
                                            "the man hit T N",
                                            "the man hit the N",
                                            "the man hit the ball"};
        std::vector<std::string> got;
        for (const auto& w : seq.forms) got.push_back(render(g.alphabet(), w));
        c.add("sequential chomsky-2", got == want, got.empty() ? "" : "ends " + got.back());
    });

    return c.report;
}

} // namespace lspace
