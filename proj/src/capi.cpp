#include "lspace/lspace.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "lspace/error.hpp"
#include "lspace/json_io.hpp"

struct lspace_grammar {
    lspace::Grammar g;
};

struct lspace_tree {
    lspace::DerivationTree t;
};

namespace {

using namespace lspace;

thread_local std::string g_last_error;

template <class F>
lspace_status guard(F&& body) noexcept
{
    try {
        body();
        g_last_error.clear();
        return LSPACE_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return static_cast<lspace_status>(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return LSPACE_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return LSPACE_INTERNAL;
    }
}

void need(const void* p, const char* what)
{
    if (!p) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
}

char* dup(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.data(), s.size() + 1);
    return out;
}

void emit(char** out, const Json& j)
{
    need(out, "output pointer");
    *out = dup(j.dump(2));
}

std::size_t cap_or_default(std::size_t cap)
{
    return cap == 0 ? kDefaultLengthCap : cap;
}

std::vector<std::string> split_list(const char* text)
{
    std::vector<std::string> out;
    if (!text) return out;
    std::string_view s(text);
    if (s.empty()) return out;
    std::size_t i = 0;
    for (;;) {
        const auto j = s.find(',', i);
        out.emplace_back(s.substr(i, j == std::string_view::npos ? std::string_view::npos : j - i));
        if (j == std::string_view::npos) break;
        i = j + 1;
    }
    return out;
}

} // namespace

extern "C" {

const char* lspace_version(void)
{
    return "0.1.0";
}

const char* lspace_last_error(void)
{
    return g_last_error.c_str();
}

const char* lspace_status_name(lspace_status status)
{
    if (status == LSPACE_OK) return "Ok";
    if (status == LSPACE_INTERNAL) return "Internal";
    if (status < LSPACE_INVALID_ARGUMENT || status > LSPACE_OVERFLOW) return "Unknown";
    return error_code_name(static_cast<ErrorCode>(status)).data();
}

void lspace_string_free(char* s)
{
    std::free(s);
}

lspace_status lspace_grammar_parse(const char* text, lspace_grammar** out)
{
    return guard([&] {
        need(text, "text");
        need(out, "output pointer");
        *out = new lspace_grammar{parse_grammar(text)};
    });
}

lspace_status lspace_grammar_reference(const char* name, lspace_grammar** out)
{
    return guard([&] {
        need(name, "name");
        need(out, "output pointer");
        *out = new lspace_grammar{parse_grammar(reference_grammar(name))};
    });
}

lspace_status lspace_reference_names(char** json)
{
    return guard([&] {
        Json names = Json::array();
        for (auto n : reference_grammar_names()) names.push_back(n);
        emit(json, names);
    });
}

void lspace_grammar_free(lspace_grammar* g)
{
    delete g;
}

lspace_status lspace_grammar_to_text(const lspace_grammar* g, char** out)
{
    return guard([&] {
        need(g, "grammar");
        need(out, "output pointer");
        *out = dup(to_text(g->g));
    });
}

lspace_status lspace_grammar_to_json(const lspace_grammar* g, char** json)
{
    return guard([&] {
        need(g, "grammar");
        emit(json, to_json(g->g));
    });
}

lspace_status lspace_validate(const lspace_grammar* g, char** json)
{
    return guard([&] {
        need(g, "grammar");
        emit(json, to_json(validate(g->g), g->g.alphabet()));
    });
}

lspace_status lspace_derive(const lspace_grammar* g, size_t gens, size_t length_cap, char** json)
{
    return guard([&] {
        need(g, "grammar");
        emit(json, to_json(derive(g->g, gens, cap_or_default(length_cap))));
    });
}

lspace_status lspace_derive_sequential(const lspace_grammar* g, size_t step_limit, int strategy, char** json)
{
    return guard([&] {
        need(g, "grammar");
        if (strategy != LSPACE_SEQ_LEFTMOST && strategy != LSPACE_SEQ_RULE_CYCLE)
            throw Error(ErrorCode::InvalidArgument, "unknown sequential strategy");
        const auto s = strategy == LSPACE_SEQ_LEFTMOST ? SequentialStrategy::Leftmost : SequentialStrategy::RuleCycle;
        emit(json, to_json(derive_sequential(g->g, step_limit, s), g->g.alphabet()));
    });
}

lspace_status lspace_tree_derive(const lspace_grammar* g, size_t gens, size_t length_cap, lspace_tree** out)
{
    return guard([&] {
        need(g, "grammar");
        need(out, "output pointer");
        *out = new lspace_tree{derive_tree(g->g, gens, cap_or_default(length_cap))};
    });
}

lspace_status lspace_tree_parse(const char* text, const char* erasing, lspace_tree** out)
{
    return guard([&] {
        need(text, "text");
        need(out, "output pointer");
        *out = new lspace_tree{parse_tree(text, split_list(erasing))};
    });
}

lspace_status lspace_tree_apply(const lspace_tree* t, const char* op, const char* path, size_t span, lspace_tree** out)
{
    return guard([&] {
        need(t, "tree");
        need(op, "op");
        need(path, "path");
        need(out, "output pointer");
        const TreeOp top{parse_tree_op(op), parse_path(path), span};
        *out = new lspace_tree{tree_transform(t->t, top)};
    });
}

lspace_status lspace_tree_render(const lspace_tree* t, char** out)
{
    return guard([&] {
        need(t, "tree");
        need(out, "output pointer");
        *out = dup(t->t.to_string());
    });
}

lspace_status lspace_tree_to_json(const lspace_tree* t, char** json)
{
    return guard([&] {
        need(t, "tree");
        emit(json, to_json(t->t));
    });
}

void lspace_tree_free(lspace_tree* t)
{
    delete t;
}

lspace_status lspace_map_apply(const char* expr, const char* involution, const char* input, char** out)
{
    return guard([&] {
        need(expr, "expr");
        need(input, "input");
        need(out, "output pointer");
        const MappingExpr e = parse_mapping(expr);
        if (!involution) {
            *out = dup(apply_expr(e, std::string_view(input)));
            return;
        }
        Alphabet a;
        const Word w = intern_word(a, input);
        const Involution inv = Involution::parse(a, involution);
        *out = dup(render(a, apply_expr(e, w, inv)));
    });
}

lspace_status lspace_classify(const lspace_grammar* g, unsigned flags, char** json)
{
    return guard([&] {
        need(g, "grammar");
        CountingMode mode;
        mode.index_counts_stumps = (flags & LSPACE_COUNT_STUMPS) != 0;
        mode.containment_includes_stumps = (flags & LSPACE_CONTAINMENT_EXCLUDES_STUMPS) == 0;
        emit(json, to_json(classify(g->g, mode), g->g.alphabet()));
    });
}

lspace_status lspace_rule_format(const lspace_grammar* g, char** json)
{
    return guard([&] {
        need(g, "grammar");
        emit(json, to_json(rule_format(g->g)));
    });
}

lspace_status lspace_frustration(const char* rules, const char* sample, size_t bound, char** json)
{
    return guard([&] {
        need(rules, "rules");
        need(sample, "sample");
        Alphabet a;
        const auto rs = parse_rewrite_rules(a, rules);
        const Word w = intern_word(a, sample);
        emit(json, to_json(detect_frustration(rs, w, bound == 0 ? kDefaultTilingBound : bound), rs, a));
    });
}

lspace_status lspace_analyze(const lspace_grammar* g, const char* report, size_t gens, size_t param, size_t length_cap,
                             char** json)
{
    return guard([&] {
        need(g, "grammar");
        need(report, "report");
        const std::string_view kind(report);
        const Grammar& gr = g->g;
        if (kind == "growth") {
            emit(json, to_json(count_profile(gr, gens), gr.alphabet()));
            return;
        }
        const Derivation d = derive(gr, gens, cap_or_default(length_cap));
        if (kind == "legality") {
            Json rows = Json::array();
            for (std::size_t t = 0; t < d.size(); ++t) {
                Json row = to_json(fib_legal(d.render(t)));
                row["t"] = t;
                rows.push_back(row);
            }
            emit(json, Json{{"generations", rows}});
        } else if (kind == "decompose") {
            const std::size_t x = param == 0 ? gens : param;
            Involution inv;
            const auto& a = gr.alphabet();
            if (a.size() == 2 && a.find("0") && a.find("1")) inv = Involution::binary_swap(a);
            const auto dec = decompose_self_referential(d, x, inv);
            emit(json, dec ? to_json(*dec) : Json{{"target", x}, {"kind", nullptr}, {"segments", nullptr}});
        } else if (kind == "repetition") {
            const Word& w = d[gens];
            const std::size_t p = param == 0 ? std::max<std::size_t>(1, w.size() / 2) : param;
            emit(json, to_json(repetition_stats(w, p), w, gr.alphabet()));
        } else {
            throw Error(ErrorCode::InvalidArgument, "unknown report '" + std::string(kind) + "'");
        }
    });
}

lspace_status lspace_constituent(const char* s, int allow_mappings, char** json)
{
    return guard([&] {
        need(s, "string");
        emit(json, to_json(is_fib_constituent(s, allow_mappings != 0)));
    });
}

lspace_status lspace_fib_legal(const char* s, char** json)
{
    return guard([&] {
        need(s, "string");
        emit(json, to_json(fib_legal(s)));
    });
}

lspace_status lspace_closure(const char* a, const char* b, const char* op, size_t bound, char** json)
{
    return guard([&] {
        need(op, "op");
        const std::string_view name(op);
        ClosureOp cop;
        if (name == "union")
            cop = ClosureOp::Union;
        else if (name == "concat")
            cop = ClosureOp::Concat;
        else if (name == "star")
            cop = ClosureOp::Star;
        else
            throw Error(ErrorCode::InvalidArgument, "closure op is union, concat or star");
        emit(json, to_json(closure_probe(split_list(a), split_list(b), cop, bound == 0 ? kDefaultStarBound : bound), cop));
    });
}

lspace_status lspace_ratio_equal(const lspace_grammar* g1, const lspace_grammar* g2, const char* numerator,
                                 const char* denominator, size_t gens, char** json)
{
    return guard([&] {
        need(g1, "grammar");
        need(g2, "grammar");
        need(numerator, "numerator");
        need(denominator, "denominator");
        emit(json, to_json(ratio_profiles_equal(g1->g, g2->g, numerator, denominator, gens)));
    });
}

lspace_status lspace_expand(const char* spec, char** json)
{
    return guard([&] {
        need(spec, "spec");
        emit(json, to_json(expand_generations(ExpansionSpec::parse(spec))));
    });
}

lspace_status lspace_grammar_edit(const lspace_grammar* g, const char* edit, lspace_grammar** out)
{
    return guard([&] {
        need(g, "grammar");
        need(edit, "edit");
        need(out, "output pointer");
        *out = new lspace_grammar{edit_grammar(g->g, parse_edit(edit))};
    });
}

lspace_status lspace_prune(const lspace_grammar* g, const char* rule, const char* chunk, size_t position,
                           int allow_mappings, lspace_grammar** out)
{
    return guard([&] {
        need(g, "grammar");
        need(rule, "rule");
        need(chunk, "chunk");
        need(out, "output pointer");
        const Word w = lookup_word(g->g.alphabet(), chunk);
        *out = new lspace_grammar{prune_rule(g->g, rule, w, position, allow_mappings != 0)};
    });
}

lspace_status lspace_reduce(const lspace_grammar* g, const char* target, size_t bound, int allow_mappings, char** json)
{
    return guard([&] {
        need(g, "grammar");
        need(target, "target");
        const std::string_view t(target);
        if (t != "fib" && t != "xor") throw Error(ErrorCode::InvalidArgument, "reduction target is fib or xor");
        const auto r = reduce_to_minimal(g->g, t == "fib" ? MinimalTarget::Fib : MinimalTarget::XOR,
                                         bound == 0 ? kDefaultSearchBound : bound, allow_mappings != 0);
        emit(json, to_json(r));
    });
}

lspace_status lspace_ca_run(const char* table, const char* state, size_t steps, int fixed_zero, char** json)
{
    return guard([&] {
        need(table, "table");
        need(state, "state");
        const RuleTable rt = RuleTable::parse(table);
        CAState st = CAState::parse(state, fixed_zero ? Boundary::FixedZero : Boundary::Periodic);
        Json states = Json::array({st.to_string()});
        for (std::size_t k = 0; k < steps; ++k) {
            st = ca_step(rt, st);
            states.push_back(st.to_string());
        }
        emit(json, Json{{"table", rt.to_string()},
                        {"boundary", fixed_zero ? "zero" : "periodic"},
                        {"states", states}});
    });
}

lspace_status lspace_reproduce(char** json, int* passed)
{
    return guard([&] {
        const GoldenReport r = reproduce();
        if (passed) *passed = r.passed() ? 1 : 0;
        emit(json, to_json(r));
    });
}

} // extern "C"
