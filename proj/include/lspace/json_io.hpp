#pragma once

// JSON renderings of the library's reports. These documents are the contract
// surface of the C API and the command-line tool.

#include <json.hpp>

#include "lspace/analysis.hpp"
#include "lspace/automata.hpp"
#include "lspace/classifier.hpp"
#include "lspace/derivation_tree.hpp"
#include "lspace/golden.hpp"
#include "lspace/grammar.hpp"
#include "lspace/transforms.hpp"

namespace lspace {

using Json = nlohmann::ordered_json;

/// Exact rational as "p/q" (or "p" when q = 1).
std::string rational_text(const Rational& r);

Json to_json(const Grammar& g);
Json to_json(const Diagnostics& d, const Alphabet& a);
Json to_json(const Derivation& d);
Json to_json(const SequentialDerivation& d, const Alphabet& a);
Json to_json(const DerivationTree& t);

Json to_json(const ClassificationReport& r, const Alphabet& a);
Json to_json(const RuleFormat& f);
Json to_json(const TilingConflict& t, const std::vector<RewriteRule>& rules, const Alphabet& a);

Json to_json(const GrowthProfile& p, const Alphabet& a);
Json to_json(const LegalityReport& r);
Json to_json(const Constituency& c);
Json to_json(const RatioComparison& c);
Json to_json(const Decomposition& d);
Json to_json(const RepetitionStats& r, const Word& s, const Alphabet& a);
Json to_json(const ClosureResult& r, ClosureOp op);

Json to_json(const ExpansionResult& r);
Json to_json(const ReductionResult& r);

Json to_json(const GoldenReport& r);

} // namespace lspace
