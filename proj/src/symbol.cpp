#include "lspace/symbol.hpp"

#include <algorithm>
#include <cctype>

#include "lspace/error.hpp"

namespace lspace {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::size_t code_point_length(unsigned char lead)
{
    if (lead < 0x80) return 1;
    if ((lead >> 5) == 0x6) return 2;
    if ((lead >> 4) == 0xE) return 3;
    if ((lead >> 3) == 0x1E) return 4;
    return 1;
}

std::size_t code_points(std::string_view s)
{
    std::size_t n = 0;
    for (std::size_t i = 0; i < s.size(); i += code_point_length(static_cast<unsigned char>(s[i]))) ++n;
    return n;
}

} // namespace

std::string_view error_code_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DuplicateRule: return "DuplicateRule";
    case ErrorCode::MissingAxiom: return "MissingAxiom";
    case ErrorCode::ForeignSymbol: return "ForeignSymbol";
    case ErrorCode::LengthCapExceeded: return "LengthCapExceeded";
    case ErrorCode::PartialInvolution: return "PartialInvolution";
    case ErrorCode::NotBinaryMinimal: return "NotBinaryMinimal";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::NotBinary: return "NotBinary";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotAStump: return "NotAStump";
    case ErrorCode::InvalidSpan: return "InvalidSpan";
    case ErrorCode::NotConstituent: return "NotConstituent";
    case ErrorCode::NotPresent: return "NotPresent";
    case ErrorCode::EmptySister: return "EmptySister";
    case ErrorCode::InvalidSelector: return "InvalidSelector";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::Overflow: return "Overflow";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> line)
    : std::runtime_error(line ? "line " + std::to_string(*line) + ": " + message : message),
      code_(code), line_(line)
{
}

Symbol Alphabet::intern(std::string_view name)
{
    if (name.empty()) throw Error(ErrorCode::InvalidArgument, "empty symbol name");
    if (name == kNullToken) throw Error(ErrorCode::InvalidArgument, "'~' is reserved for the empty string");
    if (std::any_of(name.begin(), name.end(), is_space))
        throw Error(ErrorCode::InvalidArgument, "symbol name contains whitespace");
    if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
    const auto id = static_cast<Symbol>(names_.size());
    names_.emplace_back(name);
    index_.emplace(names_.back(), id);
    return id;
}

std::optional<Symbol> Alphabet::find(std::string_view name) const
{
    if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
    return std::nullopt;
}

const std::string& Alphabet::name(Symbol s) const
{
    if (!contains(s)) throw Error(ErrorCode::ForeignSymbol, "symbol id " + std::to_string(index_of(s)) + " not in alphabet");
    return names_[index_of(s)];
}

std::vector<Symbol> Alphabet::symbols() const
{
    std::vector<Symbol> out;
    out.reserve(names_.size());
    for (std::uint32_t i = 0; i < names_.size(); ++i) out.push_back(static_cast<Symbol>(i));
    return out;
}

bool Alphabet::single_character() const noexcept
{
    return std::all_of(names_.begin(), names_.end(), [](const std::string& n) { return code_points(n) == 1; });
}

std::string render(const Alphabet& alphabet, const Word& word)
{
    const bool compact = alphabet.single_character();
    std::string out;
    out.reserve(word.size() * (compact ? 1 : 3));
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!compact && i > 0) out.push_back(' ');
        out += alphabet.name(word[i]);
    }
    return out;
}

std::vector<std::string> tokenize(std::string_view text)
{
    std::vector<std::string> out;
    if (std::any_of(text.begin(), text.end(), is_space)) {
        std::size_t i = 0;
        while (i < text.size()) {
            while (i < text.size() && is_space(text[i])) ++i;
            std::size_t j = i;
            while (j < text.size() && !is_space(text[j])) ++j;
            if (j > i) out.emplace_back(text.substr(i, j - i));
            i = j;
        }
        return out;
    }
    for (std::size_t i = 0; i < text.size();) {
        const std::size_t n = std::min(code_point_length(static_cast<unsigned char>(text[i])), text.size() - i);
        out.emplace_back(text.substr(i, n));
        i += n;
    }
    return out;
}

Word intern_word(Alphabet& alphabet, std::string_view text)
{
    Word w;
    for (const auto& tok : tokenize(text)) w.push_back(alphabet.intern(tok));
    return w;
}

Word lookup_word(const Alphabet& alphabet, std::string_view text)
{
    Word w;
    for (const auto& tok : tokenize(text)) {
        auto s = alphabet.find(tok);
        if (!s) throw Error(ErrorCode::ForeignSymbol, "symbol '" + tok + "' is not in the alphabet");
        w.push_back(*s);
    }
    return w;
}

} // namespace lspace
