#include "lspace/analysis.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <mutex>

#include "lspace/error.hpp"

namespace lspace {

namespace {

constexpr std::size_t kMaxCachedFib = 40;
constexpr std::size_t kMaxCachedThueMorse = 30;

void require_binary(std::string_view s)
{
    for (char c : s)
        if (c != '0' && c != '1') throw Error(ErrorCode::NotBinary, "expected a string over {0, 1}");
}

Count checked_add(Count a, Count b)
{
    Count r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "symbol count exceeds 64 bits");
    return r;
}

Count checked_mul(Count a, Count b)
{
    Count r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "symbol count exceeds 64 bits");
    return r;
}

std::size_t fib_length(std::size_t n)
{
    std::size_t a = 1, b = 1; // |g0|, |g1|
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t c = a + b;
        a = b;
        b = c;
    }
    return a;
}

} // namespace

const std::string& fib_word(std::size_t n)
{
    static std::mutex mu;
    static std::deque<std::string> cache{"0", "1"};
    if (n > kMaxCachedFib) throw Error(ErrorCode::IndexOutOfRange, "Fib generation " + std::to_string(n) + " is too long");
    std::lock_guard lock(mu);
    while (cache.size() <= n) cache.push_back(cache[cache.size() - 2] + cache[cache.size() - 1]);
    return cache[n];
}

const std::string& thue_morse_word(std::size_t n)
{
    static std::mutex mu;
    static std::deque<std::string> cache{"0"};
    if (n > kMaxCachedThueMorse)
        throw Error(ErrorCode::IndexOutOfRange, "Thue-Morse generation " + std::to_string(n) + " is too long");
    std::lock_guard lock(mu);
    while (cache.size() <= n) cache.push_back(cache.back() + negative(cache.back()));
    return cache[n];
}

Grammar minimal_fib_grammar()
{
    return parse_grammar("axiom: 0\n0 -> 1\n1 -> 0 1\n");
}

Grammar minimal_xor_grammar()
{
    return parse_grammar("axiom: 0\n0 -> 0 1\n1 -> 1 0\n");
}

std::vector<Count> GrowthProfile::series(Symbol s, std::size_t first, std::size_t last) const
{
    const auto it = std::find(symbols.begin(), symbols.end(), s);
    if (it == symbols.end()) throw Error(ErrorCode::ForeignSymbol, "symbol not in profile");
    if (last >= counts.size() || first > last) throw Error(ErrorCode::IndexOutOfRange, "generation range outside the profile");
    const auto k = static_cast<std::size_t>(it - symbols.begin());
    std::vector<Count> out;
    for (std::size_t t = first; t <= last; ++t) out.push_back(counts[t][k]);
    return out;
}

GrowthProfile growth_profile(const Derivation& d)
{
    GrowthProfile p;
    p.symbols = d.grammar.alphabet().symbols();
    for (const Word& w : d.generations) {
        std::vector<Count> row(p.symbols.size(), 0);
        for (Symbol s : w) ++row[index_of(s)];
        p.counts.push_back(std::move(row));
        p.totals.push_back(w.size());
    }
    return p;
}

GrowthProfile count_profile(const Grammar& g, std::size_t n)
{
    GrowthProfile p;
    p.symbols = g.alphabet().symbols();
    const std::size_t k = p.symbols.size();

    // matrix[j][i]: occurrences of symbol i in one step from symbol j.
    std::vector<std::vector<Count>> matrix(k, std::vector<Count>(k, 0));
    for (std::size_t j = 0; j < k; ++j) {
        const auto* prod = g.production(p.symbols[j]);
        if (!prod) {
            matrix[j][j] = 1;
            continue;
        }
        for (Symbol s : prod->rhs) ++matrix[j][index_of(s)];
    }

    std::vector<Count> v(k, 0);
    for (Symbol s : g.axiom()) ++v[index_of(s)];
    for (std::size_t t = 0;; ++t) {
        Count total = 0;
        for (Count c : v) total = checked_add(total, c);
        p.counts.push_back(v);
        p.totals.push_back(total);
        if (t == n) break;
        std::vector<Count> next(k, 0);
        for (std::size_t j = 0; j < k; ++j) {
            if (v[j] == 0) continue;
            for (std::size_t i = 0; i < k; ++i)
                if (matrix[j][i]) next[i] = checked_add(next[i], checked_mul(v[j], matrix[j][i]));
        }
        v = std::move(next);
    }
    return p;
}

FibonacciMatch matches_fibonacci(const std::vector<Count>& seq)
{
    if (seq.size() < 4) throw Error(ErrorCode::TooShort, "need at least four terms");
    for (std::size_t burn_in = 0; burn_in <= 2; ++burn_in) {
        const std::size_t first = burn_in + 2;
        if (seq.size() < first + 3) break; // fewer than three triples left
        bool ok = true;
        for (std::size_t t = first; t < seq.size() && ok; ++t)
            ok = seq[t] >= seq[t - 1] && seq[t] - seq[t - 1] == seq[t - 2];
        if (ok) return {true, burn_in};
    }
    return {false, 0};
}

bool is_fibonacci_number(Count n)
{
    Count a = 0, b = 1;
    while (a < n) {
        if (b > std::numeric_limits<Count>::max() - a) return false;
        const Count c = a + b;
        a = b;
        b = c;
    }
    return a == n;
}

LegalityReport fib_legal(std::string_view s)
{
    require_binary(s);
    LegalityReport r;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.substr(i, 2) == "00") r.violations.push_back({"00", i});
        if (s.substr(i, 3) == "111") r.violations.push_back({"111", i});
    }
    r.legal = r.violations.empty();
    return r;
}

Constituency is_constituent(std::string_view s, ConstituentFamily family, bool allow_mappings)
{
    require_binary(s);
    if (s.empty()) return {};

    std::vector<std::size_t> candidates;
    if (family == ConstituentFamily::Fib) {
        for (std::size_t i = 0; fib_length(i) <= s.size(); ++i)
            if (fib_length(i) == s.size()) candidates.push_back(i);
    } else {
        for (std::size_t i = 0; (std::size_t{1} << i) <= s.size(); ++i)
            if ((std::size_t{1} << i) == s.size()) candidates.push_back(i);
    }
    auto word = [&](std::size_t i) -> const std::string& {
        return family == ConstituentFamily::Fib ? fib_word(i) : thue_morse_word(i);
    };

    for (std::size_t i : candidates)
        if (word(i) == s) return {true, i, MappingExpr::Id};
    if (!allow_mappings) return {};
    for (std::size_t i : candidates)
        for (MappingExpr e : {MappingExpr::M, MappingExpr::N, MappingExpr::MN})
            if (apply_expr(e, word(i)) == s) return {true, i, e};
    return {};
}

Constituency is_fib_constituent(std::string_view s, bool allow_mappings)
{
    return is_constituent(s, ConstituentFamily::Fib, allow_mappings);
}

RatioProfile ratio_profile(const Grammar& g, std::string_view numerator, std::string_view denominator, std::size_t n)
{
    const auto num = g.alphabet().find(numerator);
    const auto den = g.alphabet().find(denominator);
    if (!num || !den) throw Error(ErrorCode::ForeignSymbol, "ratio symbols must belong to the grammar's alphabet");
    const GrowthProfile p = count_profile(g, n);
    constexpr auto kMax = static_cast<Count>(std::numeric_limits<std::int64_t>::max());

    RatioProfile r;
    for (std::size_t t = 1; t <= n; ++t) {
        const Count a = p.counts[t][index_of(*num)];
        const Count b = p.counts[t][index_of(*den)];
        if (a > kMax || b > kMax) throw Error(ErrorCode::Overflow, "count does not fit a 64-bit rational");
        if (b == 0)
            r.ratios.push_back(std::nullopt);
        else
            r.ratios.push_back(Rational(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)));
    }
    return r;
}

RatioComparison ratio_profiles_equal(const Grammar& g1, const Grammar& g2, std::string_view numerator,
                                     std::string_view denominator, std::size_t n)
{
    RatioComparison c;
    c.first = ratio_profile(g1, numerator, denominator, n);
    c.second = ratio_profile(g2, numerator, denominator, n);
    c.equal = c.first.ratios == c.second.ratios;
    return c;
}

std::optional<Decomposition> decompose_self_referential(const Derivation& d, std::size_t x, const Involution& inv)
{
    if (x < 2 || x >= d.size())
        throw Error(ErrorCode::IndexOutOfRange, "decomposition target must satisfy 2 <= x < " + std::to_string(d.size()));
    const Word& target = d[x];

    struct Candidate {
        Segment seg;
        Word image;
    };
    std::vector<Candidate> all;
    for (std::size_t i = 0; i < x; ++i) {
        if (d[i].empty() || d[i].size() > target.size()) continue;
        // Images under N are skipped when the involution does not cover g_i.
        const bool negatable = std::all_of(d[i].begin(), d[i].end(), [&](Symbol s) { return inv.maps(s); });
        for (MappingExpr e : kAllMappings) {
            if (has_negative(e) && !negatable) continue;
            all.push_back({{i, e}, apply_expr(e, d[i], inv)});
        }
    }

    auto cover = [&](bool id_only) -> std::optional<std::vector<Segment>> {
        const std::size_t n = target.size();
        constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
        auto fits = [&](const Candidate& c, std::size_t pos) {
            return (!id_only || c.seg.mapping == MappingExpr::Id) && pos + c.image.size() <= n &&
                   std::equal(c.image.begin(), c.image.end(), target.begin() + static_cast<std::ptrdiff_t>(pos));
        };
        // best[pos]: fewest segments covering target[pos..n).
        std::vector<std::size_t> best(n + 1, kNone);
        best[n] = 0;
        for (std::size_t pos = n; pos-- > 0;)
            for (const auto& c : all)
                if (fits(c, pos) && best[pos + c.image.size()] != kNone)
                    best[pos] = std::min(best[pos], best[pos + c.image.size()] + 1);
        if (best[0] == kNone) return std::nullopt;

        // Candidates are generated in (generation, mapping) order, so the first
        // fitting one on an optimal path gives the lexicographically smallest cover.
        std::vector<Segment> segs;
        for (std::size_t pos = 0; pos < n;)
            for (const auto& c : all)
                if (fits(c, pos) && best[pos + c.image.size()] + 1 == best[pos]) {
                    segs.push_back(c.seg);
                    pos += c.image.size();
                    break;
                }
        return segs;
    };

    if (auto segs = cover(true)) return Decomposition{x, std::move(*segs), DecompositionKind::Perfect};
    if (auto segs = cover(false)) return Decomposition{x, std::move(*segs), DecompositionKind::Partial};
    return std::nullopt;
}

Word reassemble(const Derivation& d, const Decomposition& dec, const Involution& inv)
{
    Word out;
    for (const auto& s : dec.segments) {
        const Word piece = apply_expr(s.mapping, d[s.generation], inv);
        out.insert(out.end(), piece.begin(), piece.end());
    }
    return out;
}

RepetitionStats repetition_stats(const Word& s, std::size_t max_period)
{
    RepetitionStats r;
    if (s.empty()) return r;
    r.max_exponent = 1;
    r.period = 1;
    r.length = 1;
    const std::size_t n = s.size();
    max_period = std::min(max_period, n);
    for (std::size_t p = 1; p <= max_period; ++p) {
        std::size_t run = 0;
        for (std::size_t i = 0; i + p <= n; ++i) {
            const bool same = i + p < n && s[i] == s[i + p];
            if (same) {
                ++run;
                continue;
            }
            if (run > 0) {
                const Rational e(static_cast<std::int64_t>(run + p), static_cast<std::int64_t>(p));
                if (e > r.max_exponent) {
                    r.max_exponent = e;
                    r.position = i - run;
                    r.period = p;
                    r.length = run + p;
                }
            }
            run = 0;
        }
    }
    r.has_cube = r.max_exponent >= 3;
    return r;
}

std::string_view to_string(ClosureOp op) noexcept
{
    switch (op) {
    case ClosureOp::Union: return "union";
    case ClosureOp::Concat: return "concat";
    case ClosureOp::Star: return "star";
    }
    return "?";
}

ClosureResult closure_probe(const std::vector<std::string>& a, const std::vector<std::string>& b, ClosureOp op,
                            std::size_t bound)
{
    ClosureResult r;
    auto test = [&](const std::string& s) {
        ++r.tested;
        if (!fib_legal(s).legal) {
            r.holds_at_bound = false;
            r.counterexample = s;
            return false;
        }
        return true;
    };

    switch (op) {
    case ClosureOp::Union:
        for (const auto* set : {&a, &b})
            for (const auto& s : *set)
                if (!test(s)) return r;
        break;
    case ClosureOp::Concat:
        for (const auto& x : a)
            for (const auto& y : b)
                if (!test(x + y)) return r;
        break;
    case ClosureOp::Star: {
        std::vector<std::string> layer{""};
        for (std::size_t k = 1; k <= bound && !a.empty(); ++k) {
            std::vector<std::string> next;
            for (const auto& prefix : layer)
                for (const auto& x : a) {
                    next.push_back(prefix + x);
                    if (!test(next.back())) return r;
                }
            layer = std::move(next);
        }
        break;
    }
    }
    return r;
}

} // namespace lspace
