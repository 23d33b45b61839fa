#include "lspace/automata.hpp"

#include "lspace/error.hpp"

namespace lspace {

RuleTable RuleTable::parse(std::string_view bits)
{
    if (bits.size() != 8) throw Error(ErrorCode::InvalidArgument, "rule tables have exactly 8 bits");
    std::array<bool, 8> out{};
    for (std::size_t k = 0; k < 8; ++k) {
        if (bits[k] != '0' && bits[k] != '1') throw Error(ErrorCode::NotBinary, "rule table bits must be 0 or 1");
        out[k] = bits[k] == '1';
    }
    return RuleTable(out);
}

RuleTable RuleTable::majority()
{
    return parse("00010111");
}

std::string RuleTable::to_string() const
{
    std::string s;
    for (bool b : outputs_) s.push_back(b ? '1' : '0');
    return s;
}

CAState CAState::parse(std::string_view bits, Boundary boundary)
{
    if (bits.empty()) throw Error(ErrorCode::InvalidArgument, "a CA state needs at least one cell");
    CAState st;
    st.boundary = boundary;
    for (char c : bits) {
        if (c != '0' && c != '1') throw Error(ErrorCode::NotBinary, "CA cells must be 0 or 1");
        st.cells.push_back(c == '1');
    }
    return st;
}

std::string CAState::to_string() const
{
    std::string s;
    for (bool b : cells) s.push_back(b ? '1' : '0');
    return s;
}

CAState ca_step(const RuleTable& rt, const CAState& st)
{
    const std::size_t n = st.cells.size();
    CAState out{std::vector<bool>(n), st.boundary};
    auto at = [&](std::size_t i, int offset) {
        if (st.boundary == Boundary::Periodic) return static_cast<bool>(st.cells[(i + n + offset) % n]);
        if ((offset < 0 && i == 0) || (offset > 0 && i + 1 == n)) return false;
        return static_cast<bool>(st.cells[i + offset]);
    };
    for (std::size_t i = 0; i < n; ++i) out.cells[i] = rt(at(i, -1), st.cells[i], at(i, 1));
    return out;
}

} // namespace lspace
