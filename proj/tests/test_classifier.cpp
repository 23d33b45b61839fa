#include <doctest.h>

#include "lspace/classifier.hpp"
#include "lspace/error.hpp"
#include "lspace/golden.hpp"

using namespace lspace;

namespace {

Grammar ref(std::string_view name) { return parse_grammar(reference_grammar(name)); }

std::string name_of(const Grammar& g, const std::optional<Symbol>& s) { return s ? g.alphabet().name(*s) : "-"; }

} // namespace

TEST_CASE("rule_index ignores null symbols unless asked")
{
    Grammar g = ref("efib1");
    const Production p0 = *g.production(g.symbol("0")); // 0 -> 1 ε
    CHECK(rule_index(g, p0, {}) == 1);
    CHECK(rule_index(g, p0, {true, true}) == 2);
}

TEST_CASE("reference labels under the default mode")
{
    struct Case {
        const char* name;
        bool symmetric;
        Asymmetry asymmetry;
    };
    const Case cases[] = {
        {"xor", true, Asymmetry::None},      {"xor-dagger", true, Asymmetry::None},
        {"fib", false, Asymmetry::Strong},   {"g-i", false, Asymmetry::Strong},
        {"eq9", false, Asymmetry::Strong},   {"efib1", false, Asymmetry::Weak},
        {"efib2", false, Asymmetry::Strong},
    };
    for (const auto& c : cases) {
        CAPTURE(c.name);
        auto r = classify(ref(c.name));
        CHECK(r.symmetric == c.symmetric);
        CHECK(r.asymmetry == c.asymmetry);
        CHECK(r.mode == CountingMode{});
    }
}

TEST_CASE("strong term, weak term and remainder")
{
    Grammar gi = ref("g-i");
    auto r = classify(gi);
    CHECK(name_of(gi, r.strong_term) == "1");
    CHECK(name_of(gi, r.weak_term) == "0");
    REQUIRE(r.remainder);
    CHECK(render(gi.alphabet(), *r.remainder) == "1");

    Grammar g9 = ref("eq9");
    auto r9 = classify(g9);
    CHECK(name_of(g9, r9.strong_term) == "b");
    REQUIRE(r9.remainder);
    CHECK(render(g9.alphabet(), *r9.remainder) == "bab");
    // remainder over a non-binary alphabet has no Fib reading
    CHECK_FALSE(r9.remainder_is_fib_constituent);

    auto w = classify(ref("efib1"));
    CHECK(w.strong_term);
    CHECK_FALSE(w.remainder);
}

TEST_CASE("exhaustive only for the symmetric grammars")
{
    CHECK(classify(ref("xor")).exhaustive);
    CHECK(classify(ref("xor-dagger")).exhaustive);
    CHECK_FALSE(classify(ref("fib")).exhaustive);
    CHECK_FALSE(classify(ref("eq9")).exhaustive);
}

TEST_CASE("counting mode changes the efib1 verdict")
{
    // with null symbols counted both indices are 2: no asymmetry at all
    auto r = classify(ref("efib1"), {true, true});
    CHECK(r.asymmetry == Asymmetry::None);
    CHECK_FALSE(r.symmetric);
    CHECK_FALSE(r.strong_term);
}

TEST_CASE("a grammar with a stump is never symmetric")
{
    auto r = classify(parse_grammar("axiom: 0\n0 -> 0 s\n1 -> 1 0\n"));
    CHECK_FALSE(r.symmetric);
}

TEST_CASE("rule formats")
{
    auto fib = rule_format(ref("fib"));
    CHECK(fib.axiom_rule == AxiomSchema::I);
    CHECK(fib.nonaxiom_rule == NonAxiomSchema::V);
    CHECK(fib.family == Family::Fib);
    auto x = rule_format(ref("xor"));
    CHECK(x.axiom_rule == AxiomSchema::II);
    CHECK(x.family == Family::XOR);
    CHECK(rule_format(ref("xor-dagger")).family == Family::XOR);
    CHECK(rule_format(ref("fib-mappable")).family == Family::FibMappable);
    CHECK(rule_format(parse_grammar("axiom: 0\n0 -> 1 1\n1 -> 0 1\n")).family == Family::Feigenbaum);
    CHECK(rule_format(parse_grammar("axiom: 0\n0 -> 1\n1 -> 0\n")).family == Family::TrivialAlternation);
    CHECK(rule_format(parse_grammar("axiom: 0\n0 -> 0 1\n1 -> 1 1\n")).family == Family::Degenerate);
}

TEST_CASE("family table")
{
    using A = AxiomSchema;
    using N = NonAxiomSchema;
    CHECK(family_of(A::I, N::V) == Family::Fib);
    CHECK(family_of(A::II, N::V) == Family::XOR);
    CHECK(family_of(A::III, N::V) == Family::Feigenbaum);
    CHECK(family_of(A::I, N::IV) == Family::TrivialAlternation);
    CHECK(family_of(A::II, N::IV) == Family::FibMappable);
    CHECK(family_of(A::II, N::VI) == Family::Degenerate);
    CHECK(family_of(A::III, N::IV) == Family::Degenerate);
    CHECK(family_of(A::III, N::VI) == Family::Degenerate);
    CHECK(family_of(A::I, N::VI) == Family::Degenerate);
}

TEST_CASE("rule_format preconditions")
{
    for (auto name : {"efib1", "g-i", "eq9", "chomsky-2"}) {
        CAPTURE(name);
        try {
            rule_format(ref(name));
            FAIL("expected NotBinaryMinimal");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotBinaryMinimal);
        }
    }
    CHECK_THROWS_AS(rule_format(parse_grammar("axiom: 0 1\n0 -> 1\n1 -> 0 1\n")), Error);
    CHECK_THROWS_AS(rule_format(parse_grammar("axiom: 0\n0 -> 1\n")), Error);
}

TEST_CASE("frustration on two-symbol left-hand sides")
{
    Alphabet a;
    auto rules = parse_rewrite_rules(a, "01 -> 101\n10 -> 0101\n");
    auto t = detect_frustration(rules, lookup_word(a, "0101"));
    CHECK(t.verdict == FrustrationVerdict::Frustrated);
    REQUIRE(t.matches.size() == 3);
    CHECK(t.matches[0] == RuleMatch{0, 0, 2});
    CHECK(t.matches[1] == RuleMatch{1, 1, 2});
    CHECK(t.matches[2] == RuleMatch{0, 2, 2});
    using P = std::pair<std::size_t, std::size_t>;
    CHECK(t.conflicts == std::vector<P>{{0, 1}, {1, 2}});
    // {01@0, 01@2} and {10@1}
    CHECK(t.distinct_tilings == 2);
    for (auto [i, j] : t.conflicts) CHECK(t.matches[i].overlaps(t.matches[j]));
}

TEST_CASE("frustration edge cases")
{
    Alphabet a;
    auto none = parse_rewrite_rules(a, "00 -> 0\n11 -> 1\n");
    auto t = detect_frustration(none, lookup_word(a, "0101"));
    CHECK(t.matches.empty());
    CHECK(t.verdict == FrustrationVerdict::NotFrustrated);

    auto single = parse_rewrite_rules(a, "0 -> 1\n1 -> 0 1\n");
    auto s = detect_frustration(single, lookup_word(a, "0101"));
    CHECK(s.verdict == FrustrationVerdict::NotApplicable);
    CHECK(s.conflicts.empty());

    auto erase = parse_rewrite_rules(a, "# comment\n01 -> ~\n");
    CHECK(erase.at(0).rhs.empty());
    CHECK_THROWS_AS(parse_rewrite_rules(a, "01 101\n"), Error);
}

TEST_CASE("tiling enumeration respects its bound")
{
    Alphabet a;
    auto rules = parse_rewrite_rules(a, "01 -> 1\n10 -> 0\n");
    std::string sample;
    for (int i = 0; i < 40; ++i) sample += "01";
    auto t = detect_frustration(rules, lookup_word(a, sample), 5);
    CHECK(t.tilings_truncated);
    CHECK(t.distinct_tilings <= 5);
}
