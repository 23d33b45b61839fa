#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lspace {

/// Interned symbol; only meaningful together with the Alphabet that issued it.
enum class Symbol : std::uint32_t {};

constexpr std::uint32_t index_of(Symbol s) noexcept { return static_cast<std::uint32_t>(s); }

/// Spelling of the empty right-hand side in grammar files. Never a Symbol.
inline constexpr std::string_view kNullToken = "~";

/// A finite sequence of symbols (a word, a generation, a rule body).
using Word = std::vector<Symbol>;

/// Ordered, duplicate-free set of named symbols.
class Alphabet {
public:
    Alphabet() = default;

    /// Returns the existing id for `name` or appends a new symbol.
    /// Throws InvalidArgument for empty names, names containing whitespace, or the null token.
    Symbol intern(std::string_view name);

    std::optional<Symbol> find(std::string_view name) const;
    bool contains(Symbol s) const noexcept { return index_of(s) < names_.size(); }
    const std::string& name(Symbol s) const;

    std::size_t size() const noexcept { return names_.size(); }
    bool empty() const noexcept { return names_.empty(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::vector<Symbol> symbols() const;

    /// True when every symbol name is exactly one character (code point).
    bool single_character() const noexcept;

    bool operator==(const Alphabet& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Symbol> index_;
};

/// Renders a word: concatenated when the alphabet is single-character, else space-joined.
std::string render(const Alphabet& alphabet, const Word& word);

/// Splits free text into symbol names: on whitespace if any is present, else one
/// name per UTF-8 code point.
std::vector<std::string> tokenize(std::string_view text);

/// Tokenizes and interns every token into `alphabet`.
Word intern_word(Alphabet& alphabet, std::string_view text);

/// Tokenizes and looks every token up; throws ForeignSymbol for unknown names.
Word lookup_word(const Alphabet& alphabet, std::string_view text);

} // namespace lspace
