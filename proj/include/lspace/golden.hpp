#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lspace {

enum class CheckStatus { Pass, Fail, Skip };
std::string_view to_string(CheckStatus s) noexcept;

struct GoldenCheck {
    std::string name;
    CheckStatus status;
    std::string detail;
};

struct GoldenReport {
    std::vector<GoldenCheck> checks;

    /// No check failed (skipped rows are printed typos and do not count).
    bool passed() const;
};

/// Re-derives every printed derivation table and classification label of the
/// reference grammars. Printed rows whose length contradicts the grammar's
/// length law are reported as Skip.
GoldenReport reproduce();

/// Named reference grammar in file syntax (fib, xor, xor-dagger, efib1, efib2,
/// g-i, eq9, eq11, eq12a, eq12b, eq13, eq14, eq19, eq20, chomsky-2, ...).
std::string_view reference_grammar(std::string_view name);
std::vector<std::string_view> reference_grammar_names();

} // namespace lspace
