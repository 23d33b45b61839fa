#include "lspace/mappings.hpp"

#include <algorithm>
#include <cctype>

#include "lspace/error.hpp"

namespace lspace {

Involution::Involution(const Alphabet& alphabet, const std::vector<std::pair<Symbol, Symbol>>& pairs)
    : image_(alphabet.size())
{
    auto set = [&](Symbol from, Symbol to) {
        auto& slot = image_.at(index_of(from));
        if (slot && *slot != to)
            throw Error(ErrorCode::InvalidArgument, "'" + alphabet.name(from) + "' is mapped twice; not an involution");
        slot = to;
    };
    for (auto [a, b] : pairs) {
        if (!alphabet.contains(a) || !alphabet.contains(b)) throw Error(ErrorCode::ForeignSymbol, "involution names a foreign symbol");
        set(a, b);
        set(b, a);
    }
}

Involution Involution::binary_swap(const Alphabet& alphabet)
{
    const auto zero = alphabet.find("0");
    const auto one = alphabet.find("1");
    if (alphabet.size() != 2 || !zero || !one)
        throw Error(ErrorCode::NotBinary, "the default negative needs the alphabet {0, 1}; pass an explicit involution");
    return Involution(alphabet, {{*zero, *one}});
}

Involution Involution::parse(Alphabet& alphabet, std::string_view spec)
{
    std::vector<std::pair<Symbol, Symbol>> pairs;
    std::size_t i = 0;
    while (i < spec.size()) {
        auto comma = spec.find(',', i);
        if (comma == std::string_view::npos) comma = spec.size();
        const auto item = spec.substr(i, comma - i);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0 || eq + 1 == item.size())
            throw Error(ErrorCode::InvalidArgument, "involution entries look like a=b, got '" + std::string(item) + "'");
        pairs.emplace_back(alphabet.intern(item.substr(0, eq)), alphabet.intern(item.substr(eq + 1)));
        i = comma + 1;
    }
    return Involution(alphabet, pairs);
}

bool Involution::maps(Symbol s) const noexcept
{
    return index_of(s) < image_.size() && image_[index_of(s)].has_value();
}

Symbol Involution::operator()(Symbol s) const
{
    if (!maps(s)) throw Error(ErrorCode::PartialInvolution, "symbol id " + std::to_string(index_of(s)) + " has no image");
    return *image_[index_of(s)];
}

std::string_view to_string(MappingExpr e) noexcept
{
    switch (e) {
    case MappingExpr::Id: return "ID";
    case MappingExpr::M: return "M";
    case MappingExpr::N: return "N";
    case MappingExpr::MN: return "MN";
    }
    return "?";
}

MappingExpr parse_mapping(std::string_view text)
{
    std::string up;
    for (char c : text) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (up == "ID" || up == "COPY") return MappingExpr::Id;
    if (up.empty()) throw Error(ErrorCode::InvalidArgument, "empty mapping expression");
    MappingExpr e = MappingExpr::Id;
    for (char c : up) {
        if (c == 'M')
            e = compose(e, MappingExpr::M);
        else if (c == 'N')
            e = compose(e, MappingExpr::N);
        else
            throw Error(ErrorCode::InvalidArgument, "mapping expressions are words over {M, N} or ID, got '" + std::string(text) + "'");
    }
    return e;
}

Word mirror(const Word& s)
{
    return Word(s.rbegin(), s.rend());
}

Word negative(const Word& s, const Involution& inv)
{
    Word out;
    out.reserve(s.size());
    for (Symbol x : s) out.push_back(inv(x));
    return out;
}

Word apply_expr(MappingExpr e, const Word& s, const Involution& inv)
{
    Word out = has_negative(e) ? negative(s, inv) : s;
    if (has_mirror(e)) std::reverse(out.begin(), out.end());
    return out;
}

std::string mirror(std::string_view s)
{
    return std::string(s.rbegin(), s.rend());
}

std::string negative(std::string_view s)
{
    std::string out(s);
    for (char& c : out) {
        if (c == '0')
            c = '1';
        else if (c == '1')
            c = '0';
        else
            throw Error(ErrorCode::NotBinary, "negative of a non-binary string");
    }
    return out;
}

std::string apply_expr(MappingExpr e, std::string_view s)
{
    std::string out = has_negative(e) ? negative(s) : std::string(s);
    if (has_mirror(e)) std::reverse(out.begin(), out.end());
    return out;
}

} // namespace lspace
