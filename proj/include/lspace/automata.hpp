#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace lspace {

/// Radius-1 binary rule table; entry k is the output for neighborhood k = 4*left + 2*self + right.
class RuleTable {
public:
    explicit RuleTable(std::array<bool, 8> outputs) : outputs_(outputs) {}

    /// Eight '0'/'1' characters ordered by neighborhood 000..111.
    static RuleTable parse(std::string_view bits);
    static RuleTable majority();

    bool operator()(bool left, bool self, bool right) const noexcept
    {
        return outputs_[(left ? 4 : 0) | (self ? 2 : 0) | (right ? 1 : 0)];
    }
    std::string to_string() const;

private:
    std::array<bool, 8> outputs_;
};

enum class Boundary { Periodic, FixedZero };

struct CAState {
    std::vector<bool> cells;
    Boundary boundary = Boundary::Periodic;

    static CAState parse(std::string_view bits, Boundary boundary = Boundary::Periodic);
    std::string to_string() const;
};

/// Synchronous update of every cell from its (left, self, right) neighborhood.
CAState ca_step(const RuleTable& rt, const CAState& st);

} // namespace lspace
