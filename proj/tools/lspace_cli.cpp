// lspace: command-line front end over the C API.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lspace/lspace.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct Failure {
    lspace_status status;
    std::string message;
};

void check(lspace_status s)
{
    if (s != LSPACE_OK) throw Failure{s, lspace_last_error()};
}

struct GrammarDeleter {
    void operator()(lspace_grammar* g) const { lspace_grammar_free(g); }
};
struct TreeDeleter {
    void operator()(lspace_tree* t) const { lspace_tree_free(t); }
};
using GrammarPtr = std::unique_ptr<lspace_grammar, GrammarDeleter>;
using TreePtr = std::unique_ptr<lspace_tree, TreeDeleter>;

std::string take(char* s)
{
    std::string out(s ? s : "");
    lspace_string_free(s);
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{LSPACE_INVALID_ARGUMENT, "cannot read '" + path + "'"};
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// A grammar argument is a file path or `ref:<name>` for a built-in grammar.
GrammarPtr load_grammar(const std::string& arg)
{
    lspace_grammar* g = nullptr;
    if (arg.rfind("ref:", 0) == 0)
        check(lspace_grammar_reference(arg.c_str() + 4, &g));
    else
        check(lspace_grammar_parse(read_file(arg).c_str(), &g));
    return GrammarPtr(g);
}

std::string read_stdin()
{
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    std::string s = ss.str();
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

// Generic human rendering: one `key: value` line per top-level field.
void print_fields(const Json& j)
{
    for (const auto& [k, v] : j.items()) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
}

struct Options {
    bool json = false;
    std::size_t length_cap = 0;
    bool length_cap_set = false;
};

std::size_t effective_cap(const Options& o)
{
    if (o.length_cap_set) return o.length_cap;
    if (const char* env = std::getenv("LSPACE_LENGTH_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0)
            throw CLI::ValidationError("LSPACE_LENGTH_CAP", "must be a positive integer");
        return static_cast<std::size_t>(v);
    }
    return LSPACE_DEFAULT_LENGTH_CAP;
}

void output(const Options& o, const std::string& json_text, void (*human)(const Json&))
{
    if (o.json) {
        std::cout << json_text << '\n';
        return;
    }
    human(Json::parse(json_text));
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Parallel-rewriting grammar toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(lspace_version()));

    Options opt;
    std::size_t seed = 0;
    app.add_flag("--json", opt.json, "print machine-readable JSON");
    auto* cap_opt = app.add_option("--length-cap", opt.length_cap, "largest generation length (symbols)")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "reserved; every operation is deterministic");
    auto common = [&](CLI::App* sub) {
        sub->add_flag("--json", opt.json, "print machine-readable JSON");
        sub->add_option("--length-cap", opt.length_cap, "largest generation length (symbols)")->check(CLI::PositiveNumber);
        sub->add_option("--seed", seed, "reserved; every operation is deterministic");
    };

    // derive
    std::string file, file2;
    std::size_t gens = 7;
    auto* derive_cmd = app.add_subcommand("derive", "parallel derivation, one generation per line");
    derive_cmd->add_option("grammar", file, "grammar file or ref:<name>")->required();
    derive_cmd->add_option("--gens", gens, "number of generations")->capture_default_str();
    common(derive_cmd);

    // derive-seq
    std::size_t steps = 20;
    std::string strategy = "leftmost";
    auto* seq_cmd = app.add_subcommand("derive-seq", "sequential (one rewrite per step) derivation");
    seq_cmd->add_option("grammar", file, "grammar file or ref:<name>")->required();
    seq_cmd->add_option("--steps", steps, "step limit")->capture_default_str();
    seq_cmd->add_option("--strategy", strategy, "leftmost | rule-cycle")
        ->check(CLI::IsMember({"leftmost", "rule-cycle"}))
        ->capture_default_str();
    common(seq_cmd);

    // tree
    std::string tree_text, erasing, tree_op, path = "0";
    std::size_t span = 2;
    auto* tree_cmd = app.add_subcommand("tree", "derivation tree, optionally transformed");
    tree_cmd->add_option("grammar", file, "grammar file or ref:<name>");
    tree_cmd->add_option("--gens", gens, "tree depth")->capture_default_str();
    tree_cmd->add_option("--parse", tree_text, "bracketed tree instead of a grammar, e.g. 0(0,1)");
    tree_cmd->add_option("--erasing", erasing, "comma-separated labels of empty nodes (with --parse)");
    tree_cmd->add_option("--op", tree_op, "collapse | percolate | u_prune | atomize")
        ->check(CLI::IsMember({"collapse", "percolate", "u_prune", "atomize"}));
    tree_cmd->add_option("--path", path, "dotted node path, first component is the root index")->capture_default_str();
    tree_cmd->add_option("--span", span, "number of sisters to atomize")->capture_default_str();
    common(tree_cmd);

    // map
    std::string expr, involution, input;
    auto* map_cmd = app.add_subcommand("map", "apply a mapping expression (ID, M, N, MN, ...)");
    map_cmd->add_option("--expr", expr, "mapping expression")->required();
    map_cmd->add_option("--involution", involution, "symbol exchange a=b,c=d (default 0<->1)");
    map_cmd->add_option("input", input, "string to map (default: stdin)");
    common(map_cmd);

    // classify
    bool count_stumps = false, excl_stumps = false;
    auto* classify_cmd = app.add_subcommand("classify", "symmetric / asymmetric classification");
    classify_cmd->add_option("grammar", file, "grammar file or ref:<name>")->required();
    classify_cmd->add_flag("--count-stumps", count_stumps, "count null symbols in rule indices");
    classify_cmd->add_flag("--containment-excludes-stumps", excl_stumps, "ignore null symbols when testing containment");
    common(classify_cmd);

    // format
    auto* format_cmd = app.add_subcommand("format", "rule-format schema of a two-symbol grammar");
    format_cmd->add_option("grammar", file, "grammar file or ref:<name>")->required();
    common(format_cmd);

    // frustration
    std::string sample;
    std::size_t bound = 0;
    auto* frus_cmd = app.add_subcommand("frustration", "overlap conflicts of multi-symbol left-hand sides");
    frus_cmd->add_option("rules", file, "rules file (lhs -> rhs per line)")->required();
    frus_cmd->add_option("--sample", sample, "string to tile")->required();
    frus_cmd->add_option("--bound", bound, "tiling enumeration bound (default 10000)");
    common(frus_cmd);

    // analyze
    std::string report = "growth", closure_op = "union", set_a, set_b;
    std::size_t target = 0, max_period = 0;
    bool no_mappings = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "growth, legality, decomposition, repetitions, constituency, closure");
    analyze_cmd->add_option("grammar", file, "grammar file or ref:<name>");
    analyze_cmd->add_option("--gens", gens, "number of generations")->capture_default_str();
    analyze_cmd->add_option("--report", report, "growth | legality | decompose | repetition | constituent | closure")
        ->check(CLI::IsMember({"growth", "legality", "decompose", "repetition", "constituent", "closure"}))
        ->capture_default_str();
    analyze_cmd->add_option("--target", target, "decomposition target generation (default: last)");
    analyze_cmd->add_option("--max-period", max_period, "largest period for repetitions (default: half length)");
    analyze_cmd->add_option("--input", input, "string for the constituent report");
    analyze_cmd->add_flag("--no-mappings", no_mappings, "constituency without M/N images");
    analyze_cmd->add_option("--op", closure_op, "union | concat | star")
        ->check(CLI::IsMember({"union", "concat", "star"}))
        ->capture_default_str();
    analyze_cmd->add_option("--a", set_a, "comma-separated strings");
    analyze_cmd->add_option("--b", set_b, "comma-separated strings");
    analyze_cmd->add_option("--bound", bound, "star bound (default 3)");
    common(analyze_cmd);

    // transform
    std::string expand, prune, reduce, edit;
    auto* transform_cmd = app.add_subcommand("transform", "expansions, edits, pruning and reduction");
    transform_cmd->add_option("grammar", file, "grammar file or ref:<name>");
    auto* expand_opt = transform_cmd->add_option("--expand", expand, "generation lists, e.g. \"0=3 1=4\"");
    auto* edit_opt = transform_cmd->add_option("--edit", edit, "add_constant e 0:1 | remove_constant e | permute 0=1,1=0 | advance 1 0 2");
    auto* prune_opt = transform_cmd->add_option("--prune", prune, "rule:chunk@position, e.g. 1:101@0");
    auto* reduce_opt = transform_cmd->add_option("--reduce", reduce, "fib | xor")->check(CLI::IsMember({"fib", "xor"}));
    transform_cmd->add_option("--bound", bound, "reduction search bound (default 10000)");
    transform_cmd->add_flag("--no-mappings", no_mappings, "only plain Fib generations are constituents");
    expand_opt->excludes(edit_opt)->excludes(prune_opt)->excludes(reduce_opt);
    edit_opt->excludes(prune_opt)->excludes(reduce_opt);
    prune_opt->excludes(reduce_opt);
    common(transform_cmd);

    // equiv
    std::string pair = "0:1";
    auto* equiv_cmd = app.add_subcommand("equiv", "compare exact symbol ratios of two grammars");
    equiv_cmd->add_option("first", file, "grammar file or ref:<name>")->required();
    equiv_cmd->add_option("second", file2, "grammar file or ref:<name>")->required();
    equiv_cmd->add_option("--pair", pair, "numerator:denominator symbols")->capture_default_str();
    equiv_cmd->add_option("--gens", gens, "number of generations")->capture_default_str();
    common(equiv_cmd);

    // ca
    std::string table = "00010111", state, boundary = "periodic";
    std::size_t ca_steps = 1;
    auto* ca_cmd = app.add_subcommand("ca", "radius-1 binary cellular automaton");
    ca_cmd->add_option("--table", table, "8 output bits for neighborhoods 000..111")->capture_default_str();
    ca_cmd->add_option("--state", state, "initial cells")->required();
    ca_cmd->add_option("--steps", ca_steps, "number of steps")->capture_default_str();
    ca_cmd->add_option("--boundary", boundary, "periodic | zero")
        ->check(CLI::IsMember({"periodic", "zero"}))
        ->capture_default_str();
    common(ca_cmd);

    // reproduce
    auto* repro_cmd = app.add_subcommand("reproduce", "re-derive every printed table and label");
    common(repro_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsageError;
    }
    opt.length_cap_set = cap_opt->count() > 0;
    for (auto* sub : app.get_subcommands())
        if (sub->get_option_no_throw("--length-cap") && sub->get_option("--length-cap")->count() > 0) opt.length_cap_set = true;
    try {
        const std::size_t cap = effective_cap(opt);
        char* out = nullptr;
        if (*derive_cmd) {
            auto g = load_grammar(file);
            check(lspace_derive(g.get(), gens, cap, &out));
            output(opt, take(out), [](const Json& j) {
                for (const auto& row : j["generations"]) std::cout << row["string"].get<std::string>() << '\n';
            });
        } else if (*seq_cmd) {
            auto g = load_grammar(file);
            check(lspace_derive_sequential(g.get(), steps, strategy == "leftmost" ? LSPACE_SEQ_LEFTMOST : LSPACE_SEQ_RULE_CYCLE,
                                           &out));
            output(opt, take(out), [](const Json& j) {
                for (const auto& f : j["forms"]) std::cout << f.get<std::string>() << '\n';
            });
        } else if (*tree_cmd) {
            lspace_tree* raw = nullptr;
            if (!tree_text.empty()) {
                check(lspace_tree_parse(tree_text.c_str(), erasing.empty() ? nullptr : erasing.c_str(), &raw));
            } else {
                if (file.empty()) throw CLI::RequiredError("grammar or --parse");
                auto g = load_grammar(file);
                check(lspace_tree_derive(g.get(), gens, cap, &raw));
            }
            TreePtr t(raw);
            if (!tree_op.empty()) {
                check(lspace_tree_apply(t.get(), tree_op.c_str(), path.c_str(), span, &raw));
                t.reset(raw);
            }
            check(lspace_tree_to_json(t.get(), &out));
            output(opt, take(out), [](const Json& j) { std::cout << j["bracketed"].get<std::string>() << '\n'; });
        } else if (*map_cmd) {
            if (input.empty()) input = read_stdin();
            check(lspace_map_apply(expr.c_str(), involution.empty() ? nullptr : involution.c_str(), input.c_str(), &out));
            const std::string mapped = take(out);
            if (opt.json)
                std::cout << Json{{"expr", expr}, {"input", input}, {"output", mapped}}.dump(2) << '\n';
            else
                std::cout << mapped << '\n';
        } else if (*classify_cmd) {
            auto g = load_grammar(file);
            unsigned flags = (count_stumps ? LSPACE_COUNT_STUMPS : 0u) | (excl_stumps ? LSPACE_CONTAINMENT_EXCLUDES_STUMPS : 0u);
            check(lspace_classify(g.get(), flags, &out));
            output(opt, take(out), print_fields);
        } else if (*format_cmd) {
            auto g = load_grammar(file);
            check(lspace_rule_format(g.get(), &out));
            output(opt, take(out), print_fields);
        } else if (*frus_cmd) {
            check(lspace_frustration(read_file(file).c_str(), sample.c_str(), bound, &out));
            output(opt, take(out), print_fields);
        } else if (*analyze_cmd) {
            if (report == "constituent") {
                if (input.empty()) throw CLI::RequiredError("--input");
                check(lspace_constituent(input.c_str(), no_mappings ? 0 : 1, &out));
            } else if (report == "closure") {
                check(lspace_closure(set_a.c_str(), set_b.c_str(), closure_op.c_str(), bound, &out));
            } else {
                if (file.empty()) throw CLI::RequiredError("grammar");
                auto g = load_grammar(file);
                const std::size_t param = report == "decompose" ? target : max_period;
                check(lspace_analyze(g.get(), report.c_str(), gens, param, cap, &out));
            }
            output(opt, take(out), print_fields);
        } else if (*transform_cmd) {
            if (!expand.empty()) {
                check(lspace_expand(expand.c_str(), &out));
                output(opt, take(out), [](const Json& j) {
                    std::cout << j["text"].get<std::string>();
                    std::cout << "skip: " << j["skip"] << "\npreserves_fib_counts: " << j["preserves_fib_counts"]
                              << "\ncounts_are_fibonacci_numbers: " << j["counts_are_fibonacci_numbers"] << '\n';
                });
            } else {
                if (file.empty()) throw CLI::RequiredError("grammar");
                auto g = load_grammar(file);
                if (!reduce.empty()) {
                    check(lspace_reduce(g.get(), reduce.c_str(), bound, no_mappings ? 0 : 1, &out));
                    output(opt, take(out), print_fields);
                } else if (!edit.empty() || !prune.empty()) {
                    lspace_grammar* raw = nullptr;
                    if (!edit.empty()) {
                        check(lspace_grammar_edit(g.get(), edit.c_str(), &raw));
                    } else {
                        const auto colon = prune.find(':');
                        const auto at = prune.rfind('@');
                        if (colon == std::string::npos || at == std::string::npos || at < colon)
                            throw CLI::ValidationError("--prune", "expected rule:chunk@position");
                        std::size_t pos = 0;
                        try {
                            pos = std::stoul(prune.substr(at + 1));
                        } catch (const std::exception&) {
                            throw CLI::ValidationError("--prune", "position must be a number");
                        }
                        check(lspace_prune(g.get(), prune.substr(0, colon).c_str(),
                                           prune.substr(colon + 1, at - colon - 1).c_str(), pos, no_mappings ? 0 : 1, &raw));
                    }
                    GrammarPtr result(raw);
                    if (opt.json) {
                        check(lspace_grammar_to_json(result.get(), &out));
                        std::cout << take(out) << '\n';
                    } else {
                        check(lspace_grammar_to_text(result.get(), &out));
                        std::cout << take(out);
                    }
                } else {
                    throw CLI::RequiredError("--expand, --edit, --prune or --reduce");
                }
            }
        } else if (*equiv_cmd) {
            const auto colon = pair.find(':');
            if (colon == std::string::npos || colon == 0 || colon + 1 == pair.size())
                throw CLI::ValidationError("--pair", "expected numerator:denominator");
            auto g1 = load_grammar(file);
            auto g2 = load_grammar(file2);
            check(lspace_ratio_equal(g1.get(), g2.get(), pair.substr(0, colon).c_str(), pair.substr(colon + 1).c_str(), gens,
                                     &out));
            output(opt, take(out), print_fields);
        } else if (*ca_cmd) {
            check(lspace_ca_run(table.c_str(), state.c_str(), ca_steps, boundary == "zero" ? 1 : 0, &out));
            output(opt, take(out), [](const Json& j) {
                for (const auto& s : j["states"]) std::cout << s.get<std::string>() << '\n';
            });
        } else if (*repro_cmd) {
            int passed = 0;
            check(lspace_reproduce(&out, &passed));
            output(opt, take(out), [](const Json& j) {
                for (const auto& c : j["checks"]) {
                    std::cout << c["status"].get<std::string>() << "  " << c["name"].get<std::string>();
                    if (!c["detail"].get<std::string>().empty()) std::cout << "  (" << c["detail"].get<std::string>() << ')';
                    std::cout << '\n';
                }
            });
            return passed ? 0 : kDomainError;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const Failure& f) {
        std::cerr << "error: " << lspace_status_name(f.status) << ": " << f.message << '\n';
        return kDomainError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomainError;
    }
    return 0;
}
