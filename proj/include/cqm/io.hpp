#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "cqm/analysis.hpp"
#include "cqm/classifier.hpp"
#include "cqm/mutation.hpp"
#include "cqm/quiver.hpp"
#include "cqm/reduction.hpp"

namespace cqm {

using Json = nlohmann::ordered_json;

/// {"m":2,"n":3,"arrows":[{"from":1,"to":2,"colour":0,"mult":1},...]} with
/// 1-based vertices. Only arrows with from < to are written.
Json to_json(const ColouredQuiver& q);

/// Reads the quiver format. Each listed arrow gets its skew partner unless the
/// partner is listed too; "mult" defaults to 1. Structural problems throw
/// InvalidInput, but the result is not validated (see validate()).
ColouredQuiver quiver_from_json(const Json& j);

/// quiver_from_json followed by require_valid.
ColouredQuiver read_quiver(std::string_view text);

Json to_json(const MutationStep& step);
Json to_json(const MutationSequence& seq);
MutationSequence sequence_from_json(const Json& j);

Json to_json(const ValidationReport& report);
Json to_json(const MembershipVerdict& verdict);
Json to_json(const CliqueDecomposition& split);
Json to_json(const ZeroPart& part);
Json to_json(const ZeroPartReport& report);
Json to_json(const EnergyReport& report);
Json to_json(const ExtremalWitness& witness);

/// Parses text as JSON, turning parse errors into InvalidInput.
Json parse_json(std::string_view text);

}  // namespace cqm
