#include <algorithm>
#include <functional>

#include "lspace/classifier.hpp"
#include "lspace/error.hpp"

namespace lspace {

std::string_view to_string(FrustrationVerdict v) noexcept
{
    switch (v) {
    case FrustrationVerdict::Frustrated: return "frustrated";
    case FrustrationVerdict::NotFrustrated: return "not-frustrated";
    case FrustrationVerdict::NotApplicable: return "not-applicable";
    }
    return "?";
}

std::vector<RewriteRule> parse_rewrite_rules(Alphabet& alphabet, std::string_view text)
{
    std::vector<RewriteRule> rules;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto arrow = line.find("->");
        if (arrow == std::string_view::npos) {
            if (line.find_first_not_of(" \t\r") != std::string_view::npos)
                throw Error(ErrorCode::SyntaxError, "expected 'lhs -> rhs'", line_no);
            continue;
        }
        auto side = [&](std::string_view s) {
            const auto a = s.find_first_not_of(" \t\r");
            if (a == std::string_view::npos) return std::string_view{};
            return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
        };
        const auto lhs = side(line.substr(0, arrow));
        const auto rhs = side(line.substr(arrow + 2));
        if (lhs.empty()) throw Error(ErrorCode::SyntaxError, "empty left-hand side", line_no);
        RewriteRule r{intern_word(alphabet, lhs), rhs == kNullToken ? Word{} : intern_word(alphabet, rhs)};
        rules.push_back(std::move(r));
    }
    return rules;
}

TilingConflict detect_frustration(const std::vector<RewriteRule>& rules, const Word& sample, std::size_t enumeration_bound)
{
    TilingConflict out;
    out.sample = sample;
    const bool applicable = std::any_of(rules.begin(), rules.end(), [](const RewriteRule& r) { return r.lhs.size() > 1; });
    if (!applicable) {
        out.verdict = FrustrationVerdict::NotApplicable;
        return out;
    }

    for (std::size_t k = 0; k < rules.size(); ++k) {
        const Word& lhs = rules[k].lhs;
        if (lhs.empty() || lhs.size() > sample.size()) continue;
        for (std::size_t i = 0; i + lhs.size() <= sample.size(); ++i)
            if (std::equal(lhs.begin(), lhs.end(), sample.begin() + static_cast<std::ptrdiff_t>(i)))
                out.matches.push_back({k, i, lhs.size()});
    }
    std::sort(out.matches.begin(), out.matches.end(),
              [](const RuleMatch& a, const RuleMatch& b) { return a.start != b.start ? a.start < b.start : a.rule < b.rule; });

    const auto& m = out.matches;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (m[i].overlaps(m[j])) out.conflicts.emplace_back(i, j);

    // Maximal sets of pairwise disjoint matches, enumerated left to right.
    std::vector<bool> chosen(m.size(), false);
    std::function<void(std::size_t)> search = [&](std::size_t k) {
        if (out.distinct_tilings >= enumeration_bound) {
            out.tilings_truncated = true;
            return;
        }
        if (k == m.size()) {
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (chosen[i]) continue;
                bool blocked = false;
                for (std::size_t j = 0; j < m.size() && !blocked; ++j) blocked = chosen[j] && m[i].overlaps(m[j]);
                if (!blocked) return;
            }
            ++out.distinct_tilings;
            return;
        }
        bool compatible = true;
        for (std::size_t j = 0; j < k && compatible; ++j) compatible = !(chosen[j] && m[j].overlaps(m[k]));
        if (compatible) {
            chosen[k] = true;
            search(k + 1);
            chosen[k] = false;
        }
        // Excluding k only leads to a maximal set if something overlapping k gets chosen.
        bool can_block = !compatible;
        for (std::size_t j = k + 1; j < m.size() && !can_block; ++j) can_block = m[j].overlaps(m[k]);
        if (can_block) search(k + 1);
    };
    search(0);

    out.verdict = out.conflicts.empty() ? FrustrationVerdict::NotFrustrated : FrustrationVerdict::Frustrated;
    return out;
}

} // namespace lspace
