#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lspace {

// Keep in sync with lspace_status in lspace.h (same numeric values).
enum class ErrorCode {
    InvalidArgument = 1,
    SyntaxError,
    DuplicateRule,
    MissingAxiom,
    ForeignSymbol,
    LengthCapExceeded,
    PartialInvolution,
    NotBinaryMinimal,
    TooShort,
    NotBinary,
    IndexOutOfRange,
    NotAStump,
    InvalidSpan,
    NotConstituent,
    NotPresent,
    EmptySister,
    InvalidSelector,
    NotApplicable,
    Overflow,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::optional<std::size_t> line = std::nullopt);

    ErrorCode code() const noexcept { return code_; }
    /// 1-based source line for parse errors.
    std::optional<std::size_t> line() const noexcept { return line_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> line_;
};

} // namespace lspace
