#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lspace/symbol.hpp"

namespace lspace {

/// Self-inverse, total map on an alphabet.
class Involution {
public:
    Involution() = default;

    /// `pairs` lists (a, b) meaning a<->b; a symbol absent from every pair is unmapped.
    /// Throws InvalidArgument if the pairs are inconsistent (not self-inverse).
    Involution(const Alphabet& alphabet, const std::vector<std::pair<Symbol, Symbol>>& pairs);

    /// 0<->1 swap. Throws NotBinary unless the alphabet has exactly the symbols "0" and "1".
    static Involution binary_swap(const Alphabet& alphabet);

    /// Parses `a=b,c=c`, interning names into `alphabet`.
    static Involution parse(Alphabet& alphabet, std::string_view spec);

    bool maps(Symbol s) const noexcept;
    /// Throws PartialInvolution for an unmapped symbol.
    Symbol operator()(Symbol s) const;

private:
    std::vector<std::optional<Symbol>> image_;
};

/// Element of the Klein four-group {ID, M, N, MN}, stored as two independent bits.
enum class MappingExpr : unsigned { Id = 0, M = 1, N = 2, MN = 3 };

inline constexpr MappingExpr kAllMappings[] = {MappingExpr::Id, MappingExpr::M, MappingExpr::N, MappingExpr::MN};

constexpr MappingExpr compose(MappingExpr a, MappingExpr b) noexcept
{
    return static_cast<MappingExpr>(static_cast<unsigned>(a) ^ static_cast<unsigned>(b));
}
constexpr bool has_mirror(MappingExpr e) noexcept { return (static_cast<unsigned>(e) & 1u) != 0; }
constexpr bool has_negative(MappingExpr e) noexcept { return (static_cast<unsigned>(e) & 2u) != 0; }

std::string_view to_string(MappingExpr e) noexcept;
/// Accepts ID, M, N, MN, NM (case-insensitive) and words over {M, N} such as "MMN".
MappingExpr parse_mapping(std::string_view text);

Word mirror(const Word& s);
Word negative(const Word& s, const Involution& inv);
/// Applies the canonical factors; `inv` is ignored unless e involves N.
Word apply_expr(MappingExpr e, const Word& s, const Involution& inv);

/// Binary convenience on '0'/'1' strings.
std::string mirror(std::string_view s);
std::string negative(std::string_view s);
std::string apply_expr(MappingExpr e, std::string_view s);

} // namespace lspace
